#pragma once

#include <utility>
#include <vector>

#include "respoles/types.hpp"

namespace respoles {

// Gauss-Hermite rule mapped to the model density: omega_j = omega0 +
// x_j / sqrt(h), w_j = v_j / sqrt(pi), exact for polynomial moments up to
// degree 2N-1. Nodes whose weights underflow below 1e-306 are dropped so the
// stored weights stay strictly positive.
QuadratureRule hermite_rule(int N, const SystemParams& p);

// Effective recurrence time of a finite rule: 2 pi / min node spacing.
// Decay fits are only meaningful on windows ending before ~0.8 * T_rec.
double recurrence_time(const QuadratureRule& rule);

// Method-of-steps RK4 integration of
//   du_j/dt = i omega_j u_j + (k/2) r(t - tau),   r = sum_j w_j u_j,
// with dt = tau / m (m >= 4, StepMismatch otherwise), delayed values read
// from a scalar ring buffer of past r (half-step values by cubic Lagrange
// interpolation), and the history prefilled with phi(s) * sum_j w_j x(w_j).
// init.history_profile must be sampled on the integrator grid (m+1 samples).
// Throws Instability when |r| exceeds 1e12. jobs > 1 updates oscillator
// states in an OpenMP pool; the result is bit-identical to the serial
// reference because the r reduction stays in fixed node order.
TimeSeries simulate_dde(const SystemParams& p, const QuadratureRule& rule,
                        const InitialData& init, double dt, double T,
                        int jobs = 1);

// Least-squares slope of log|r(t)| over t in [t_lo, t_hi] plus the fit r^2.
// Throws WindowEmpty when fewer than two samples fall in the window and
// SignalUnderflow when |r| <= 1e-14 inside it.
std::pair<double, double> fit_decay_rate(const TimeSeries& series, double t_lo,
                                         double t_hi);

// (k/2) int_{-tau}^{0} e^{-lambda (s + tau)} phi(s) ds by composite Simpson
// on the uniform samples of phi (a 3/8 block absorbs an odd interval count).
// The quadrature error scales as (|lambda| ds)^4, so resolve oscillatory
// lambda with enough samples.
Complex history_laplace(const std::vector<double>& phi, Complex lambda,
                        const SystemParams& p);

// Residue-expansion reconstruction on a uniform grid:
//   r(t) = sum_p D_p e^{lambda_p t}
//          * [ <psi_p|x> + H(lambda_p) (x,1)_g <psi_p|1> ] * <psi_p|1>,
// where <psi_p|x> = sum_m c_m pairing_exp_family(lambda_p, a_m),
// <psi_p|1> = continued_pairing_II(lambda_p), H = history_laplace, and
// (x,1)_g = sum_m c_m e^{i a_m omega0 - a_m^2/(4h)}. The history term is the
// pairing of psi_p against f_lambda = H (x,1)_g * 1, hence its extra
// <psi_p|1> factor; the whole bracket is <psi_p | x + f_lambda>. The bracket
// convention (bilinear, no conjugation) is pinned by cross-validation of the
// truncated sum against simulate_dde.
TimeSeries expansion_reconstruct(const std::vector<Pole>& poles,
                                 const InitialData& init,
                                 const SystemParams& p, double t0, double dt,
                                 std::size_t n_samples, int jobs = 1);

}  // namespace respoles
