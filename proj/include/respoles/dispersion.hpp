#pragma once

#include "respoles/types.hpp"

namespace respoles {

// Half-plane classification of the spectral variable. "Axis" is pinned to
// |Re lambda| <= axis_epsilon; the axis value of every continued pairing is
// the boundary limit from the right half-plane.
enum class HalfPlaneTag { Right, Axis, Left };

inline constexpr double axis_epsilon = 1e-12;

inline HalfPlaneTag half_plane_tag(Complex lambda) {
  if (lambda.real() > axis_epsilon) return HalfPlaneTag::Right;
  if (lambda.real() < -axis_epsilon) return HalfPlaneTag::Left;
  return HalfPlaneTag::Axis;
}

// lambda - i omega0 - (k/2) e^{-lambda tau}: the identical-frequency
// characteristic function whose roots are Lambert-branch values.
Complex char_identical(Complex lambda, const SystemParams& p);

// The Gaussian-weighted Cauchy integral int g(w) / (lambda - i w) dw as
// defined: convergent for Re lambda != 0, no jump term on the left. Throws
// OnAxis within axis_epsilon of the imaginary axis.
Complex cauchy_gauss(Complex lambda, const SystemParams& p);

// Analytic continuation of the Cauchy integral from the right half-plane:
// right -> cauchy_gauss, left -> cauchy_gauss + jump, axis -> right boundary
// value. Equal to sqrt(h pi) w(i sqrt(h) (lambda - i omega0)), which is
// entire, so all three branches come from one formula. Throws Overflow when
// the jump exponent h * Re((lambda - i omega0)^2) exceeds 700 on the left.
Complex continued_pairing_II(Complex lambda, const SystemParams& p);

// Derivative of continued_pairing_II in lambda.
Complex continued_pairing_II_deriv(Complex lambda, const SystemParams& p);

// Generalized characteristic function F(lambda) =
// 1 - (k/2) e^{-lambda tau} * continued_pairing_II(lambda); its zeros are the
// resonance poles.
Complex gen_char(Complex lambda, const SystemParams& p);

// Analytic dF/dlambda.
Complex gen_char_deriv(Complex lambda, const SystemParams& p);

// log F packed as Complex(log|F|, principal arg F). In the deep left
// half-plane where the jump term would overflow (exponent > 600) the value is
// computed directly in log space from the dominant term, so boundary phase
// tracking works on regions where gen_char itself is unrepresentable.
Complex gen_char_log(Complex lambda, const SystemParams& p);

// Continued pairing with test data e^{i a omega} (a >= 0): right half-plane
// by adaptive quadrature over [omega0 - 40/sqrt(h), omega0 + 40/sqrt(h)],
// left adds the jump 2 sqrt(h pi) e^{a lambda + h (lambda - i omega0)^2},
// axis takes the right boundary value (principal value plus half-residue).
// a = 0 is routed through continued_pairing_II and matches it bit for bit.
Complex pairing_exp_family(Complex lambda, double a, const SystemParams& p);

}  // namespace respoles
