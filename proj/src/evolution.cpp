#include "respoles/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "respoles/dispersion.hpp"
#include "respoles/errors.hpp"

namespace respoles {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr Complex kI(0.0, 1.0);
constexpr double kWeightFloor = 1e-306;
constexpr double kBlowupLimit = 1e12;
constexpr double kUnderflowFloor = 1e-14;

Complex eval_x(const InitialData& init, double omega) {
  Complex s = 0.0;
  for (const auto& term : init.exp_terms)
    s += term.c * std::exp(kI * (term.a * omega));
  return s;
}

}  // namespace

QuadratureRule hermite_rule(int N, const SystemParams& p) {
  p.validate();
  if (N < 1) throw ValidationError("hermite_rule: N must be >= 1");
  QuadratureRule rule;
  if (N == 1) {
    rule.nodes = {p.omega0};
    rule.weights = {1.0};
    return rule;
  }
  // Golub-Welsch: the Hermite three-term recurrence gives a symmetric
  // tridiagonal matrix with zero diagonal and off-diagonal sqrt(j/2);
  // eigenvalues are the nodes of the e^{-x^2} rule and the squared first
  // eigenvector components are the weights of its unit-mass version.
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(N);
  Eigen::VectorXd off(N - 1);
  for (int j = 1; j < N; ++j) off[j - 1] = std::sqrt(0.5 * j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off);
  if (solver.info() != Eigen::Success)
    throw NoConvergence("hermite_rule: tridiagonal eigensolver failed");
  const double root_h = std::sqrt(p.h);
  rule.nodes.reserve(N);
  rule.weights.reserve(N);
  for (int j = 0; j < N; ++j) {
    double weight = solver.eigenvectors()(0, j);
    weight *= weight;
    if (weight < kWeightFloor) continue;
    rule.nodes.push_back(p.omega0 + solver.eigenvalues()[j] / root_h);
    rule.weights.push_back(weight);
  }
  return rule;
}

double recurrence_time(const QuadratureRule& rule) {
  if (rule.nodes.size() < 2) return std::numeric_limits<double>::infinity();
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t j = 1; j < rule.nodes.size(); ++j)
    gap = std::min(gap, rule.nodes[j] - rule.nodes[j - 1]);
  if (!(gap > 0.0))
    throw ValidationError("recurrence_time: nodes must be strictly increasing");
  return 2.0 * kPi / gap;
}

TimeSeries simulate_dde(const SystemParams& p, const QuadratureRule& rule,
                        const InitialData& init, double dt, double T,
                        int jobs) {
  p.validate();
  init.validate();
  if (rule.nodes.empty() || rule.nodes.size() != rule.weights.size())
    throw ValidationError("simulate_dde: quadrature rule is empty or ragged");
  if (!is_finite(dt) || !(dt > 0.0))
    throw ValidationError("simulate_dde: dt must be positive");
  if (!is_finite(T) || T < p.tau)
    throw ValidationError("simulate_dde: T must be finite and >= tau");
  const int m = static_cast<int>(std::lround(p.tau / dt));
  if (m < 4 || std::abs(p.tau - m * dt) > 1e-9 * p.tau)
    throw StepMismatch("simulate_dde: dt must divide tau with tau/dt >= 4, got dt=" +
                       std::to_string(dt));
  if (init.history_profile.size() != static_cast<std::size_t>(m) + 1)
    throw ValidationError(
        "simulate_dde: history profile must be sampled on the integrator grid "
        "(tau/dt + 1 samples)");

  const int n_nodes = static_cast<int>(rule.nodes.size());
  const int n_steps = static_cast<int>(std::floor(T / dt + 1e-9));
  const double half_k = 0.5 * p.k;

  std::vector<Complex> u(n_nodes);
  for (int j = 0; j < n_nodes; ++j) u[j] = eval_x(init, rule.nodes[j]);
  Complex r0 = 0.0;
  for (int j = 0; j < n_nodes; ++j) r0 += rule.weights[j] * u[j];

  // rbuf[i + m] = r(i * dt), prefilled on [-tau, 0] with phi(s) * (x, 1).
  std::vector<Complex> rbuf(static_cast<std::size_t>(n_steps) + m + 1);
  for (int i = 0; i <= m; ++i) rbuf[i] = init.history_profile[i] * r0;

  // Cubic Lagrange value of r((i - m + 1/2) dt) from four step samples.
  // r has a derivative jump at every multiple of tau (rbuf indices that are
  // multiples of m), so a stencil is never allowed to reach across one of
  // those grid points: a jump at the left end of the interval switches to
  // the right-sided stencil, a jump at its right end to the left-sided one.
  // The right-sided stencil also covers the first step, which has no sample
  // before the history start.
  auto delayed_half = [&rbuf, m](int i) -> Complex {
    if (i % m == 0)
      return 0.3125 * rbuf[i] + 0.9375 * rbuf[i + 1] - 0.3125 * rbuf[i + 2] +
             0.0625 * rbuf[i + 3];
    if ((i + 1) % m == 0)
      return 0.0625 * rbuf[i - 2] - 0.3125 * rbuf[i - 1] +
             0.9375 * rbuf[i] + 0.3125 * rbuf[i + 1];
    return -0.0625 * rbuf[i - 1] + 0.5625 * rbuf[i] + 0.5625 * rbuf[i + 1] -
           0.0625 * rbuf[i + 2];
  };

  for (int i = 0; i < n_steps; ++i) {
    const Complex rd0 = rbuf[i];
    const Complex rdh = delayed_half(i);
    const Complex rd1 = rbuf[i + 1];
    auto advance = [&](int j) {
      const Complex a = kI * rule.nodes[j];
      const Complex uj = u[j];
      const Complex k1 = a * uj + half_k * rd0;
      const Complex k2 = a * (uj + 0.5 * dt * k1) + half_k * rdh;
      const Complex k3 = a * (uj + 0.5 * dt * k2) + half_k * rdh;
      const Complex k4 = a * (uj + dt * k3) + half_k * rd1;
      u[j] = uj + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    };
#ifdef RESPOLES_HAS_OPENMP
    if (jobs > 1) {
#pragma omp parallel for schedule(static) num_threads(jobs)
      for (int j = 0; j < n_nodes; ++j) advance(j);
    } else {
      for (int j = 0; j < n_nodes; ++j) advance(j);
    }
#else
    (void)jobs;
    for (int j = 0; j < n_nodes; ++j) advance(j);
#endif
    // The reduction stays serial and in node order so the result is
    // bit-identical for every job count.
    Complex r = 0.0;
    for (int j = 0; j < n_nodes; ++j) r += rule.weights[j] * u[j];
    if (!is_finite(r) || std::abs(r) > kBlowupLimit)
      throw Instability("simulate_dde: |r| exceeded 1e12 at t=" +
                        std::to_string((i + 1) * dt));
    rbuf[i + 1 + m] = r;
  }

  TimeSeries out;
  out.t0 = 0.0;
  out.dt = dt;
  out.values.assign(rbuf.begin() + m, rbuf.end());
  return out;
}

std::pair<double, double> fit_decay_rate(const TimeSeries& series, double t_lo,
                                         double t_hi) {
  if (!is_finite(t_lo) || !is_finite(t_hi) || t_lo >= t_hi)
    throw ValidationError("fit_decay_rate: window must satisfy t_lo < t_hi");
  if (!(series.dt > 0.0))
    throw ValidationError("fit_decay_rate: series dt must be positive");
  std::vector<double> ts, ys;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double t = series.time_at(i);
    if (t < t_lo - 1e-12 || t > t_hi + 1e-12) continue;
    const double mag = std::abs(series.values[i]);
    if (mag <= kUnderflowFloor)
      throw SignalUnderflow("fit_decay_rate: |r| <= 1e-14 at t=" +
                            std::to_string(t));
    ts.push_back(t);
    ys.push_back(std::log(mag));
  }
  if (ts.size() < 2)
    throw WindowEmpty("fit_decay_rate: fewer than two samples in window");
  const double n = static_cast<double>(ts.size());
  double t_mean = 0.0, y_mean = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    t_mean += ts[i];
    y_mean += ys[i];
  }
  t_mean /= n;
  y_mean /= n;
  double s_tt = 0.0, s_ty = 0.0, s_yy = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double dtc = ts[i] - t_mean;
    const double dyc = ys[i] - y_mean;
    s_tt += dtc * dtc;
    s_ty += dtc * dyc;
    s_yy += dyc * dyc;
  }
  const double rate = s_ty / s_tt;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double resid = ys[i] - y_mean - rate * (ts[i] - t_mean);
    ss_res += resid * resid;
  }
  // A flat log-magnitude only carries rounding noise in s_yy; report the
  // fit as exact instead of dividing two noise terms.
  const double floor = 1e-24 * n * std::max(1.0, y_mean * y_mean);
  const double r2 = s_yy > floor ? 1.0 - ss_res / s_yy : 1.0;
  return {rate, r2};
}

Complex history_laplace(const std::vector<double>& phi, Complex lambda,
                        const SystemParams& p) {
  p.validate();
  if (!is_finite(lambda))
    throw ValidationError("history_laplace: lambda must be finite");
  if (phi.size() < 2)
    throw ValidationError("history_laplace: need at least two samples");
  const std::size_t intervals = phi.size() - 1;
  const double ds = p.tau / static_cast<double>(intervals);
  auto f = [&](std::size_t j) -> Complex {
    const double s = -p.tau + ds * static_cast<double>(j);
    return std::exp(-lambda * (s + p.tau)) * phi[j];
  };
  Complex sum = 0.0;
  if (intervals == 1) {
    sum = 0.5 * ds * (f(0) + f(1));
  } else {
    // Composite Simpson; an odd interval count ends in one 3/8 block.
    const std::size_t simpson_end = intervals % 2 == 0 ? intervals : intervals - 3;
    for (std::size_t j = 0; j + 2 <= simpson_end; j += 2)
      sum += ds / 3.0 * (f(j) + 4.0 * f(j + 1) + f(j + 2));
    if (simpson_end != intervals) {
      const std::size_t j = simpson_end;
      sum += 0.375 * ds * (f(j) + 3.0 * f(j + 1) + 3.0 * f(j + 2) + f(j + 3));
    }
  }
  return 0.5 * p.k * sum;
}

TimeSeries expansion_reconstruct(const std::vector<Pole>& poles,
                                 const InitialData& init,
                                 const SystemParams& p, double t0, double dt,
                                 std::size_t n_samples, int jobs) {
  p.validate();
  init.validate();
  if (!is_finite(t0) || !is_finite(dt) || !(dt > 0.0))
    throw ValidationError("expansion_reconstruct: grid needs finite t0 and dt > 0");
  TimeSeries out;
  out.t0 = t0;
  out.dt = dt;
  out.values.assign(n_samples, Complex(0.0, 0.0));
  if (poles.empty() || n_samples == 0) return out;

  // Gaussian average of the frequency part: (x, 1)_g.
  Complex x_mean = 0.0;
  for (const auto& term : init.exp_terms)
    x_mean += term.c * std::exp(Complex(-term.a * term.a / (4.0 * p.h),
                                        term.a * p.omega0));

  // Per-pole constant: D_p [ <psi_p|x> + H(lambda_p) (x,1)_g <psi_p|1> ]
  // <psi_p|1>.
  std::vector<Complex> coef(poles.size());
  for (std::size_t q = 0; q < poles.size(); ++q) {
    const Pole& pole = poles[q];
    if (!is_finite(pole.lambda) || !is_finite(pole.residue) ||
        pole.residue == Complex(0.0, 0.0))
      throw ValidationError(
          "expansion_reconstruct: poles need finite lambda and nonzero residue");
    const Complex pair_one = continued_pairing_II(pole.lambda, p);
    Complex pair_x = 0.0;
    for (const auto& term : init.exp_terms)
      pair_x += term.c * pairing_exp_family(pole.lambda, term.a, p);
    const Complex hist = history_laplace(init.history_profile, pole.lambda, p);
    coef[q] = pole.residue * (pair_x + hist * x_mean * pair_one) * pair_one;
  }

  auto fill = [&](std::size_t i) {
    const double t = t0 + dt * static_cast<double>(i);
    Complex acc = 0.0;
    for (std::size_t q = 0; q < poles.size(); ++q)
      acc += coef[q] * std::exp(poles[q].lambda * t);
    out.values[i] = acc;
  };
#ifdef RESPOLES_HAS_OPENMP
  if (jobs > 1) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(n_samples);
#pragma omp parallel for schedule(static) num_threads(jobs)
    for (std::ptrdiff_t i = 0; i < n; ++i)
      fill(static_cast<std::size_t>(i));
    return out;
  }
#else
  (void)jobs;
#endif
  for (std::size_t i = 0; i < n_samples; ++i) fill(i);
  return out;
}

}  // namespace respoles
