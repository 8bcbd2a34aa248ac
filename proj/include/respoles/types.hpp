#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "respoles/errors.hpp"

namespace respoles {

using Complex = std::complex<double>;

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Model tuple: coupling k, delay tau, mean frequency omega0, Gaussian
// concentration h (frequency variance = 1/(2h)).
struct SystemParams {
  double k = 0.0;
  double tau = 1.0;
  double omega0 = 0.0;
  double h = 1.0;

  void validate() const {
    if (!is_finite(k) || !is_finite(tau) || !is_finite(omega0) || !is_finite(h))
      throw ValidationError("SystemParams: all fields must be finite");
    if (tau <= 0.0) throw ValidationError("SystemParams: tau must be > 0");
    if (h <= 0.0) throw ValidationError("SystemParams: h must be > 0");
  }
};

// Axis-aligned rectangle in the complex plane.
struct ContourBox {
  double re_min = 0.0;
  double re_max = 0.0;
  double im_min = 0.0;
  double im_max = 0.0;

  void validate() const {
    if (!is_finite(re_min) || !is_finite(re_max) || !is_finite(im_min) ||
        !is_finite(im_max))
      throw ValidationError("ContourBox: bounds must be finite");
    if (re_min >= re_max || im_min >= im_max)
      throw ValidationError("ContourBox: requires re_min < re_max and im_min < im_max");
  }
  double width() const { return re_max - re_min; }
  double height() const { return im_max - im_min; }
  Complex center() const {
    return Complex(0.5 * (re_min + re_max), 0.5 * (im_min + im_max));
  }
  bool contains(const Complex& z) const {
    return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min &&
           z.imag() <= im_max;
  }
  ContourBox inflated(double factor) const {
    double dre = 0.5 * factor * width();
    double dim = 0.5 * factor * height();
    return ContourBox{re_min - dre, re_max + dre, im_min - dim, im_max + dim};
  }
};

// A located resonance pole with its residue weight and solver metadata.
struct Pole {
  Complex lambda;
  Complex residue;
  std::optional<int> seed_branch;  // Lambert branch that seeded it, if any
  int newton_iters = 0;
  double final_residual = 0.0;  // |F(lambda)| at exit
};

// Uniformly sampled complex order-parameter trajectory.
struct TimeSeries {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<Complex> values;

  double time_at(std::size_t i) const { return t0 + dt * static_cast<double>(i); }
  std::size_t size() const { return values.size(); }
};

// Frequency nodes and positive weights discretizing the Gaussian average.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// One term of x(omega) = sum_m c_m e^{i a_m omega}.
struct ExpTerm {
  Complex c;
  double a = 0.0;
};

// Initial state (x, f) with f(s, omega) = phi(s) * x(omega) on [-tau, 0].
// history_profile holds uniform samples of phi over [-tau, 0], endpoint
// included; phi(0) = 1 so that f(0) = x.
struct InitialData {
  std::vector<ExpTerm> exp_terms;
  std::vector<double> history_profile;

  void validate() const {
    if (exp_terms.empty())
      throw ValidationError("InitialData: at least one exponential term required");
    for (const auto& t : exp_terms) {
      if (!is_finite(t.c) || !is_finite(t.a))
        throw ValidationError("InitialData: coefficients must be finite");
      if (t.a < 0.0)
        throw ValidationError("InitialData: exponents a must be >= 0");
    }
    if (history_profile.size() < 2)
      throw ValidationError("InitialData: history profile needs >= 2 samples");
    for (double v : history_profile)
      if (!is_finite(v))
        throw ValidationError("InitialData: history samples must be finite");
    if (std::abs(history_profile.back() - 1.0) > 1e-12)
      throw ValidationError("InitialData: phi(0) must equal 1");
  }

  // x = identity function of omega (single term e^{i*0*omega}), phi == 1.
  static InitialData uniform(std::size_t history_samples) {
    InitialData d;
    d.exp_terms = {ExpTerm{Complex(1.0, 0.0), 0.0}};
    d.history_profile.assign(history_samples, 1.0);
    return d;
  }
};

// Outcome of a stability test for one parameter point.
struct StabilityVerdict {
  enum class Rule { ConditionA, ConditionB, Unstable };
  bool stable = false;
  Rule rule = Rule::Unstable;
  double margin = 0.0;  // > 0 when stable, <= 0 otherwise
};

inline const char* rule_name(StabilityVerdict::Rule r) {
  switch (r) {
    case StabilityVerdict::Rule::ConditionA: return "ConditionA";
    case StabilityVerdict::Rule::ConditionB: return "ConditionB";
    default: return "Unstable";
  }
}

}  // namespace respoles
