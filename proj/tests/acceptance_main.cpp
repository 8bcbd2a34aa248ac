// Acceptance gate: ten end-to-end checks with pinned tolerances, one
// PASS/FAIL line each. Exits nonzero when any check fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"

#include "respoles/dispersion.hpp"
#include "respoles/evolution.hpp"
#include "respoles/poles.hpp"
#include "respoles/specialfn.hpp"
#include "respoles/stability.hpp"
#include "respoles/types.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;
const respoles::Complex kI(0.0, 1.0);

using respoles::Complex;
using respoles::SystemParams;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// Least-squares slope of ln(y) against ln(x).
double loglog_slope(const std::vector<double>& xs,
                    const std::vector<double>& ys) {
  const auto n = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<respoles::Pole> strongest_poles(const SystemParams& p, int count) {
  std::vector<respoles::Pole> poles;
  for (Complex seed : lambert_roots(p, -(count + 2), count + 2)) {
    respoles::Pole pole = refine_newton(seed, p);
    bool duplicate = false;
    for (const auto& kept : poles)
      if (std::abs(kept.lambda - pole.lambda) <= 1e-8) duplicate = true;
    if (!duplicate) poles.push_back(pole);
  }
  std::sort(poles.begin(), poles.end(),
            [](const respoles::Pole& a, const respoles::Pole& b) {
              if (a.lambda.real() != b.lambda.real())
                return a.lambda.real() > b.lambda.real();
              return a.lambda.imag() < b.lambda.imag();
            });
  if (poles.size() > static_cast<std::size_t>(count)) poles.resize(count);
  return poles;
}

// 1. Branch-resolved Lambert values invert z e^z and the Faddeeva evaluator
// matches an adaptive-quadrature oracle in all four quadrants.
Outcome special_function_identities() {
  constexpr double kLambertDefectTol = 1e-12;  // scaled by 1 + |z|
  constexpr double kFaddeevaRelTol = 1e-10;
  constexpr int kLambertSamples = 1000;
  constexpr int kFaddeevaSamples = 500;

  std::mt19937 rng(20260819);
  std::uniform_int_distribution<int> branch(-3, 3);
  std::uniform_real_distribution<double> coord(-8.0, 8.0);

  double worst_defect = 0.0;
  int checked = 0;
  while (checked < kLambertSamples) {
    const Complex z(coord(rng), coord(rng));
    if (std::abs(z) < 1e-3) continue;
    const int n = branch(rng);
    const Complex w = respoles::lambert_w(n, z);
    const double defect = std::abs(w * std::exp(w) - z) / (1.0 + std::abs(z));
    worst_defect = std::max(worst_defect, defect);
    ++checked;
  }

  std::uniform_real_distribution<double> wide(0.05, 6.0);
  std::uniform_real_distribution<double> low(0.05, 2.0);
  std::uniform_real_distribution<double> narrow(0.05, 3.0);
  double worst_rel = 0.0;
  for (int i = 0; i < kFaddeevaSamples; ++i) {
    // Quadrants rotate with i; the oracle loses accuracy deep below the
    // axis, so the lower half-plane stays within its certified window.
    const int quadrant = i % 4;
    double re = (quadrant == 0 || quadrant == 3) ? wide(rng) : -wide(rng);
    double im = quadrant < 2 ? wide(rng) : -low(rng);
    if (im < 0.0) re = std::copysign(narrow(rng), re);
    const Complex z(re, im);
    const Complex got = respoles::faddeeva(z);
    const Complex want = oracle::faddeeva_ref(z);
    worst_rel = std::max(worst_rel, std::abs(got - want) / std::abs(want));
  }

  Outcome out;
  out.pass = worst_defect <= kLambertDefectTol && worst_rel <= kFaddeevaRelTol;
  out.detail = "max_lambert_defect=" + num(worst_defect) +
               " max_faddeeva_relerr=" + num(worst_rel);
  return out;
}

// 2. Critical coupling closed form at two pinned points.
Outcome critical_coupling_closed_form() {
  constexpr double kTol = 1e-12;
  const double at_two = respoles::critical_coupling(2.0, kPi / 2.0);
  const double at_one = respoles::critical_coupling(1.0, kPi / 2.0);
  const double err_two = std::abs(at_two - kPi / 2.0);
  const double err_one = std::abs(at_one - 0.0);
  Outcome out;
  out.pass = err_two <= kTol && err_one <= kTol;
  out.detail = "k_c(2)=" + num(at_two) + " err=" + num(err_two) +
               " k_c(1)=" + num(at_one) + " err=" + num(err_one);
  return out;
}

// 3. Closed-form, transcendental-root-sign, and Lambert branch-exhaustion
// verdicts agree on a 200 x 200 grid away from the critical boundary.
Outcome tri_mode_stability_agreement() {
  constexpr double kBoundaryExclusion = 1e-6;
  constexpr int kGrid = 200;
  const double omega0 = kPi / 2.0;

  std::vector<double> taus(kGrid), ks(kGrid);
  for (int i = 0; i < kGrid; ++i) {
    taus[i] = 0.1 + (6.0 - 0.1) * i / (kGrid - 1);
    ks[i] = -3.0 + 6.0 * i / (kGrid - 1);
  }
  const auto closed = respoles::stability_map(
      taus, ks, omega0, respoles::StabilityMode::ClosedForm);
  const auto nishi =
      respoles::stability_map(taus, ks, omega0, respoles::StabilityMode::Nishi);
  const auto lambert = respoles::stability_map(
      taus, ks, omega0, respoles::StabilityMode::Lambert);

  int compared = 0, skipped = 0, disagreements = 0;
  for (std::size_t i = 0; i < closed.size(); ++i) {
    const double kc =
        respoles::critical_coupling(closed[i].tau, omega0);
    if (std::abs(std::abs(closed[i].k) - std::abs(kc)) <= kBoundaryExclusion) {
      ++skipped;
      continue;
    }
    ++compared;
    if (closed[i].verdict.stable != nishi[i].verdict.stable ||
        closed[i].verdict.stable != lambert[i].verdict.stable)
      ++disagreements;
  }
  Outcome out;
  out.pass = disagreements == 0 && compared > 0;
  out.detail = "cells=" + std::to_string(compared) +
               " skipped_near_boundary=" + std::to_string(skipped) +
               " disagreements=" + std::to_string(disagreements);
  return out;
}

// 4. Distance between refined roots and their Lambert seeds shrinks as
// O(1/h) for the first five roots.
Outcome lambert_seed_convergence() {
  constexpr double kSlopeLo = -1.25;
  constexpr double kSlopeHi = -0.75;
  const std::vector<double> hs = {1e2, 1e3, 1e4};

  std::vector<std::vector<double>> dist(5);
  for (double h : hs) {
    const SystemParams p{1.0, 2.0, kPi / 2.0, h};
    const auto seeds = respoles::lambert_roots(p, -2, 2);
    for (std::size_t i = 0; i < 5; ++i) {
      const auto pole = respoles::refine_newton(seeds[i], p);
      dist[i].push_back(std::abs(pole.lambda - seeds[i]));
    }
  }
  Outcome out;
  out.pass = true;
  out.detail = "slopes=";
  for (std::size_t i = 0; i < 5; ++i) {
    const double slope = loglog_slope(hs, dist[i]);
    if (!(slope >= kSlopeLo && slope <= kSlopeHi)) out.pass = false;
    out.detail += (i ? "," : "") + num(slope);
  }
  return out;
}

// 5. The two-term large-h estimate of the Gaussian Cauchy pairing is
// accurate to O(1/h^2) at a fixed off-axis point.
Outcome pairing_estimate_order() {
  constexpr double kSlopeLo = -2.2;
  constexpr double kSlopeHi = -1.8;
  const double omega0 = kPi / 2.0;
  const Complex lambda = 1.0 + kI * (omega0 + 1.0);
  const Complex shifted = lambda - kI * omega0;
  const std::vector<double> hs = {1e2, 1e3, 1e4};

  std::vector<double> errs;
  for (double h : hs) {
    const SystemParams p{1.0, 2.0, omega0, h};
    const Complex exact = respoles::continued_pairing_II(lambda, p);
    const Complex estimate =
        1.0 / shifted - 1.0 / (2.0 * h * shifted * shifted * shifted);
    errs.push_back(std::abs(exact - estimate));
  }
  const double slope = loglog_slope(hs, errs);
  Outcome out;
  out.pass = slope >= kSlopeLo && slope <= kSlopeHi;
  out.detail = "slope=" + num(slope) + " errs=" + num(errs[0]) + "," +
               num(errs[1]) + "," + num(errs[2]);
  return out;
}

// 6. The pole finder returns exactly as many poles as the argument
// principle counts, over randomized parameter sets. Search strips stay
// right of the first continuation-artifact zero string at
// Re = -1.238/sqrt(h) (see README), so every counted zero is a pole.
Outcome argument_principle_completeness() {
  constexpr int kSets = 20;
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> kmag(0.4, 2.2);
  std::uniform_real_distribution<double> taud(0.6, 3.0);
  std::uniform_real_distribution<double> w0d(0.4, 2.4);
  std::uniform_real_distribution<double> hd(40.0, 400.0);
  std::uniform_real_distribution<double> widthd(2.0, 7.0);
  std::bernoulli_distribution coin(0.5);

  int agreed = 0;
  std::string mismatch;
  for (int s = 0; s < kSets; ++s) {
    const double sign = coin(rng) ? 1.0 : -1.0;
    const SystemParams p{sign * kmag(rng), taud(rng), w0d(rng), hd(rng)};
    const double width = widthd(rng);
    respoles::ContourBox region{-1.1 / std::sqrt(p.h), 0.85,
                                p.omega0 - width, p.omega0 + width};
    const int counted = respoles::count_zeros(region, p);
    const auto found = respoles::find_poles(p, region);
    if (static_cast<int>(found.size()) == counted) {
      ++agreed;
    } else if (mismatch.empty()) {
      mismatch = " first_mismatch: set=" + std::to_string(s) +
                 " counted=" + std::to_string(counted) +
                 " found=" + std::to_string(found.size());
    }
  }
  Outcome out;
  out.pass = agreed == kSets;
  out.detail = "sets_agreeing=" + std::to_string(agreed) + "/" +
               std::to_string(kSets) + mismatch;
  return out;
}

// 7. The leading pole crosses the imaginary axis with the coupling: stable
// below the critical value at large h, unstable above it.
Outcome spectral_sign_across_threshold() {
  const double omega0 = kPi / 2.0;
  const double kc = respoles::critical_coupling(2.0, omega0);
  // Off-axis window that brackets the upper member of the crossing pair
  // while staying clear of the diagonal zero strings at h = 1e4.
  const respoles::ContourBox region{-0.3, 0.5, omega0 + 0.5, omega0 + 1.0};

  const SystemParams below{0.95 * kc, 2.0, omega0, 1e4};
  const SystemParams above{1.05 * kc, 2.0, omega0, 1e4};
  const auto poles_below = respoles::find_poles(below, region);
  const auto poles_above = respoles::find_poles(above, region);

  auto max_re = [](const std::vector<respoles::Pole>& poles) {
    double m = -1e300;
    for (const auto& p : poles) m = std::max(m, p.lambda.real());
    return m;
  };
  const double re_below = max_re(poles_below);
  const double re_above = max_re(poles_above);
  Outcome out;
  out.pass = !poles_below.empty() && !poles_above.empty() && re_below < 0.0 &&
             re_above > 0.0;
  out.detail = "max_re(0.95kc)=" + num(re_below) +
               " max_re(1.05kc)=" + num(re_above);
  return out;
}

// 8. The fitted exponential decay rate of |r(t)| matches the leading
// pole's real part, with a clean fit, inside a wall-clock budget.
Outcome decay_rate_cross_validation() {
  constexpr double kRateRelTol = 0.05;
  constexpr double kR2Min = 0.99;
  constexpr double kBudgetSeconds = 10.0;

  const auto start = std::chrono::steady_clock::now();
  const double omega0 = kPi / 2.0;
  const SystemParams p{0.8 * respoles::critical_coupling(2.0, omega0), 2.0,
                       omega0, 50.0};
  const auto rule = respoles::hermite_rule(400, p);
  const double t_rec = respoles::recurrence_time(rule);
  const double horizon = 0.8 * t_rec;
  const double dt = p.tau / 64.0;
  const auto sim = respoles::simulate_dde(
      p, rule, respoles::InitialData::uniform(65), dt, horizon);
  const auto [rate, r2] =
      respoles::fit_decay_rate(sim, 2.0 * p.tau, horizon);
  const auto lead = respoles::refine_newton(
      respoles::lambert_roots(p, 0, 0).front(), p);
  const double lead_re = lead.lambda.real();
  const double rel_err = std::abs(rate - lead_re) / std::abs(lead_re);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  Outcome out;
  out.pass = rel_err <= kRateRelTol && r2 >= kR2Min && seconds < kBudgetSeconds;
  out.detail = "rate=" + num(rate) + " lead_re=" + num(lead_re) +
               " rel_err=" + num(rel_err) + " r2=" + num(r2) +
               " elapsed=" + num(seconds) + "s";
  return out;
}

// 9. The truncated residue expansion reproduces the simulation, and its
// L2 error never grows as more poles are kept.
Outcome expansion_fidelity() {
  constexpr double kRelL2Max = 0.1;          // at 8 kept poles
  constexpr double kMonotoneSlack = 1e-9;
  const std::vector<int> kept = {2, 4, 8, 16};

  const double omega0 = kPi / 2.0;
  const SystemParams p{0.8 * respoles::critical_coupling(2.0, omega0), 2.0,
                       omega0, 50.0};
  const auto rule = respoles::hermite_rule(400, p);
  const double horizon = 0.8 * respoles::recurrence_time(rule);
  const double dt = p.tau / 64.0;
  const auto init = respoles::InitialData::uniform(65);
  const auto sim = respoles::simulate_dde(p, rule, init, dt, horizon);

  const auto i0 = static_cast<std::size_t>(std::llround(2.0 * p.tau / dt));
  const auto poles = strongest_poles(p, kept.back());

  Outcome out;
  out.pass = true;
  out.detail = "rel_l2=";
  double prev = 1e300;
  double at_eight = 1e300;
  for (std::size_t j = 0; j < kept.size(); ++j) {
    std::vector<respoles::Pole> subset(
        poles.begin(), poles.begin() + std::min<std::size_t>(
                                           kept[j], poles.size()));
    const auto rec = respoles::expansion_reconstruct(
        subset, init, p, sim.time_at(i0), dt, sim.size() - i0);
    double numer = 0.0, denom = 0.0;
    for (std::size_t i = 0; i < rec.size(); ++i) {
      numer += std::norm(rec.values[i] - sim.values[i0 + i]);
      denom += std::norm(sim.values[i0 + i]);
    }
    const double rel = std::sqrt(numer / denom);
    if (kept[j] == 8) at_eight = rel;
    if (rel > prev + kMonotoneSlack) out.pass = false;
    prev = rel;
    out.detail += (j ? "," : "") + num(rel);
  }
  if (!(at_eight <= kRelL2Max)) out.pass = false;
  return out;
}

// 10. With zero coupling the integrator reproduces the Gaussian
// characteristic function of the frequency density.
Outcome free_evolution_oracle() {
  constexpr double kMaxErr = 1e-6;
  const double omega0 = kPi / 2.0;
  const SystemParams p{0.0, 2.0, omega0, 50.0};
  const auto rule = respoles::hermite_rule(64, p);
  const double dt = p.tau / 256.0;
  const auto sim = respoles::simulate_dde(
      p, rule, respoles::InitialData::uniform(257), dt, 5.0);

  double worst = 0.0;
  for (std::size_t i = 0; i < sim.size(); ++i) {
    const double t = sim.time_at(i);
    if (t > 5.0) break;
    const Complex exact =
        std::exp(Complex(-t * t / (4.0 * p.h), omega0 * t));
    worst = std::max(worst, std::abs(sim.values[i] - exact));
  }
  Outcome out;
  out.pass = worst <= kMaxErr;
  out.detail = "max_err=" + num(worst);
  return out;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<Outcome()> fn;
  };
  const std::vector<Entry> entries = {
      {"special-function-identities", special_function_identities},
      {"critical-coupling-closed-form", critical_coupling_closed_form},
      {"tri-mode-stability-agreement", tri_mode_stability_agreement},
      {"lambert-seed-convergence", lambert_seed_convergence},
      {"pairing-estimate-order", pairing_estimate_order},
      {"argument-principle-completeness", argument_principle_completeness},
      {"spectral-sign-across-threshold", spectral_sign_across_threshold},
      {"decay-rate-cross-validation", decay_rate_cross_validation},
      {"expansion-fidelity", expansion_fidelity},
      {"free-evolution-oracle", free_evolution_oracle},
  };

  int failures = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = entries[i].fn();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (!out.pass) ++failures;
    std::printf("[%2zu] %s  %-33s %7.2fs  %s\n", i + 1,
                out.pass ? "PASS" : "FAIL", entries[i].name, seconds,
                out.detail.c_str());
  }
  std::printf("acceptance: %zu/%zu passed\n", entries.size() - failures,
              entries.size());
  return failures == 0 ? 0 : 1;
}
