#pragma once

#include <vector>

#include "respoles/types.hpp"

namespace respoles {

// Closed-form root-sign test for lambda + alpha - beta e^{-lambda tau} = 0:
// all roots have negative real parts iff (a) Re(alpha) > |beta|, or
// (b) -|beta| < Re(alpha) <= |beta| and
//     arccos(cos(Im(alpha) tau + Arg beta)) >
//     arccos(Re(alpha)/|beta|) + tau sqrt(|beta|^2 - Re(alpha)^2).
// margin is the slack of the deciding inequality. Throws BetaZero.
StabilityVerdict delayed_root_sign(Complex alpha, Complex beta, double tau);

// Critical coupling k_c(tau) = (2/tau) arccos(cos(omega0 tau)) - pi/tau.
// Requires tau > 0 and omega0 != 0 (ValidationError otherwise).
double critical_coupling(double tau, double omega0);

enum class StabilityMode { ClosedForm, Nishi, Lambert };

struct StabilityCell {
  double tau = 0.0;
  double k = 0.0;
  StabilityVerdict verdict;
};

// One verdict per (tau, k) cell, row-major in (tau index, k index) order.
// ClosedForm tests that k lies strictly between 0 and k_c(tau); Nishi calls
// delayed_root_sign(alpha = -i omega0, beta = k/2, tau); Lambert takes the
// sign of the maximal root real part over Lambert branches (exhaustion range
// [-30, 30], doubled when the argmax sits on the range edge). jobs > 1 runs
// cells in an OpenMP pool; output is identical to the serial reference.
std::vector<StabilityCell> stability_map(const std::vector<double>& tau_grid,
                                         const std::vector<double>& k_grid,
                                         double omega0, StabilityMode mode,
                                         int jobs = 1);

// Single-point versions used by stability_map.
StabilityVerdict stability_closed_form(double tau, double k, double omega0);
StabilityVerdict stability_lambert(double tau, double k, double omega0);

}  // namespace respoles
