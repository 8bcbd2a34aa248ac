#include "respoles/stability.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <limits>

#ifdef RESPOLES_HAS_OPENMP
#include <omp.h>
#endif

#include "respoles/errors.hpp"
#include "respoles/specialfn.hpp"

namespace respoles {

namespace {

constexpr double kPi = 3.14159265358979323846;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

// Largest root real part of lambda + alpha - beta e^{-lambda tau} = 0 over
// Lambert branches [-n_max, n_max], widening while the argmax sits on the
// scan edge. Roots are lambda = (1/tau) W_n(beta tau e^{alpha tau}) - alpha.
double max_root_real_part(Complex alpha, Complex beta, double tau) {
  Complex zeta = beta * tau * std::exp(alpha * tau);
  if (zeta == Complex(0.0, 0.0)) return -alpha.real();
  int n_max = 30;
  const int n_cap = 1920;
  for (;;) {
    double best = -std::numeric_limits<double>::infinity();
    int best_n = 0;
    for (int n = -n_max; n <= n_max; ++n) {
      double re = (lambert_w(n, zeta) / tau - alpha).real();
      if (re > best) {
        best = re;
        best_n = n;
      }
    }
    if (std::abs(best_n) < n_max || n_max >= n_cap) return best;
    n_max *= 2;
  }
}

}  // namespace

StabilityVerdict delayed_root_sign(Complex alpha, Complex beta, double tau) {
  if (beta == Complex(0.0, 0.0))
    throw BetaZero("delayed_root_sign requires beta != 0");
  if (!(tau > 0.0) || !std::isfinite(tau))
    throw ValidationError("delayed_root_sign requires tau > 0");
  if (!is_finite(alpha) || !is_finite(beta))
    throw ValidationError("delayed_root_sign requires finite alpha, beta");

  double re_a = alpha.real();
  double abs_b = std::abs(beta);
  StabilityVerdict v;
  if (re_a > abs_b) {
    v.stable = true;
    v.rule = StabilityVerdict::Rule::ConditionA;
    v.margin = re_a - abs_b;
    return v;
  }
  if (re_a > -abs_b) {
    double lhs = std::acos(
        clamp_unit(std::cos(alpha.imag() * tau + std::arg(beta))));
    double rhs = std::acos(clamp_unit(re_a / abs_b)) +
                 tau * std::sqrt(std::max(0.0, abs_b * abs_b - re_a * re_a));
    v.margin = lhs - rhs;
    v.stable = v.margin > 0.0;
    v.rule = v.stable ? StabilityVerdict::Rule::ConditionB
                      : StabilityVerdict::Rule::Unstable;
    return v;
  }
  v.stable = false;
  v.rule = StabilityVerdict::Rule::Unstable;
  v.margin = re_a + abs_b;
  return v;
}

double critical_coupling(double tau, double omega0) {
  if (!(tau > 0.0) || !std::isfinite(tau))
    throw ValidationError("critical_coupling requires tau > 0");
  if (omega0 == 0.0 || !std::isfinite(omega0))
    throw ValidationError("critical_coupling requires omega0 != 0");
  return (2.0 / tau) * std::acos(std::cos(omega0 * tau)) - kPi / tau;
}

StabilityVerdict stability_closed_form(double tau, double k, double omega0) {
  double kc = critical_coupling(tau, omega0);
  double lo = std::min(0.0, kc);
  double hi = std::max(0.0, kc);
  StabilityVerdict v;
  if (k > lo && k < hi) {
    v.stable = true;
    v.rule = StabilityVerdict::Rule::ConditionB;
    v.margin = std::min(k - lo, hi - k);
  } else {
    v.stable = false;
    v.rule = StabilityVerdict::Rule::Unstable;
    v.margin = k <= lo ? k - lo : hi - k;  // 0 on the degenerate interval
  }
  return v;
}

StabilityVerdict stability_lambert(double tau, double k, double omega0) {
  if (!(tau > 0.0) || !std::isfinite(tau))
    throw ValidationError("stability_lambert requires tau > 0");
  double max_re =
      max_root_real_part(Complex(0.0, -omega0), Complex(0.5 * k, 0.0), tau);
  StabilityVerdict v;
  v.margin = -max_re;
  v.stable = max_re < 0.0;
  v.rule = v.stable ? StabilityVerdict::Rule::ConditionB
                    : StabilityVerdict::Rule::Unstable;
  return v;
}

std::vector<StabilityCell> stability_map(const std::vector<double>& tau_grid,
                                         const std::vector<double>& k_grid,
                                         double omega0, StabilityMode mode,
                                         int jobs) {
  for (double tau : tau_grid)
    if (!(tau > 0.0) || !std::isfinite(tau))
      throw ValidationError("stability_map requires every tau > 0");
  for (double k : k_grid)
    if (!std::isfinite(k))
      throw ValidationError("stability_map requires finite k");

  auto cell_verdict = [&](double tau, double k) {
    switch (mode) {
      case StabilityMode::ClosedForm:
        return stability_closed_form(tau, k, omega0);
      case StabilityMode::Nishi:
        if (k == 0.0) {
          // The theorem needs beta != 0; the uncoupled system has the
          // marginal root i omega0, so the verdict is pinned directly.
          StabilityVerdict v;
          v.stable = false;
          v.rule = StabilityVerdict::Rule::Unstable;
          v.margin = 0.0;
          return v;
        }
        return delayed_root_sign(Complex(0.0, -omega0), Complex(0.5 * k, 0.0),
                                 tau);
      case StabilityMode::Lambert:
      default:
        return stability_lambert(tau, k, omega0);
    }
  };

  const std::ptrdiff_t n_tau = static_cast<std::ptrdiff_t>(tau_grid.size());
  const std::ptrdiff_t n_k = static_cast<std::ptrdiff_t>(k_grid.size());
  std::vector<StabilityCell> cells(static_cast<std::size_t>(n_tau * n_k));

  if (mode == StabilityMode::ClosedForm && !tau_grid.empty())
    critical_coupling(tau_grid.front(), omega0);  // reject omega0 = 0 up front

#ifdef RESPOLES_HAS_OPENMP
  if (jobs > 1) {
    std::exception_ptr failure;
#pragma omp parallel for collapse(2) schedule(static) num_threads(jobs)
    for (std::ptrdiff_t i = 0; i < n_tau; ++i) {
      for (std::ptrdiff_t j = 0; j < n_k; ++j) {
        try {
          StabilityCell& cell = cells[static_cast<std::size_t>(i * n_k + j)];
          cell.tau = tau_grid[static_cast<std::size_t>(i)];
          cell.k = k_grid[static_cast<std::size_t>(j)];
          cell.verdict = cell_verdict(cell.tau, cell.k);
        } catch (...) {
#pragma omp critical
          if (!failure) failure = std::current_exception();
        }
      }
    }
    if (failure) std::rethrow_exception(failure);
    return cells;
  }
#else
  (void)jobs;
#endif

  for (std::ptrdiff_t i = 0; i < n_tau; ++i) {
    for (std::ptrdiff_t j = 0; j < n_k; ++j) {
      StabilityCell& cell = cells[static_cast<std::size_t>(i * n_k + j)];
      cell.tau = tau_grid[static_cast<std::size_t>(i)];
      cell.k = k_grid[static_cast<std::size_t>(j)];
      cell.verdict = cell_verdict(cell.tau, cell.k);
    }
  }
  return cells;
}

}  // namespace respoles
