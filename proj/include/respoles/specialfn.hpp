#pragma once

#include "respoles/types.hpp"

namespace respoles {

// Faddeeva function w(z) = e^{-z^2} erfc(-iz). Upper half-plane evaluation
// uses a rational approximation for |z| < 6 and a Laplace continued fraction
// beyond; the lower half-plane is routed through the reflection identity
// w(z) = 2 e^{-z^2} - w(-z). Throws Overflow when the reflection term leaves
// the double range (Re(-z^2) > 700).
Complex faddeeva(Complex z);

// w'(z) = -2 z w(z) + 2i/sqrt(pi).
Complex faddeeva_deriv(Complex z);

// Branch `branch` of the multi-valued inverse of w -> w e^w, standard
// indexing: W_0 real on [-1/e, inf), W_{-1} real on [-1/e, 0). Residual
// |W e^W - z| <= 1e-13 * max(1, |z|). Throws BranchDomain for branch != 0 at
// z = 0 and NoConvergence if Halley iteration fails.
Complex lambert_w(int branch, Complex z);

// sqrt(h/pi) * exp(-h (zeta - omega0)^2) for complex zeta. Throws Overflow
// when the exponent exceeds 700.
Complex gaussian_density_complex(double h, double omega0, Complex zeta);

}  // namespace respoles
