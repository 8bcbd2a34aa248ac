#pragma once

// Self-contained reference oracles for the test suite. Everything here is
// deliberately independent of the library's evaluation paths: integration is
// adaptive Simpson (the library uses nested Gauss rules), the Faddeeva
// reference is the half-line integral representation, and analytic
// continuation is reproduced by Taylor stepping from right-half-plane data
// only.

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

// Adaptive Simpson with Richardson correction.
inline Complex adsimp_rec(const std::function<Complex(double)>& f, double a,
                          double b, Complex fa, Complex fm, Complex fb,
                          Complex whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  Complex flm = f(lm), frm = f(rm);
  Complex left = (b - a) / 12.0 * (fa + 4.0 * flm + fm);
  Complex right = (b - a) / 12.0 * (fm + 4.0 * frm + fb);
  Complex delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adsimp_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adsimp_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline Complex integrate(const std::function<Complex(double)>& f, double a,
                         double b, double tol = 1e-13, int depth = 48) {
  Complex fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  Complex whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adsimp_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

// Faddeeva reference from w(z) = (2/sqrt(pi)) int_0^inf e^{-s^2 + 2 i z s} ds.
// The integrand magnitude is e^{y^2 - (s - max(0,-y))^2}, so the quadrature
// tolerance is scaled by the peak and the interval stops 7 units past it.
// For Im z < 0 the answer is smaller than the peak by e^{-x^2}-style
// cancellation, which caps the achievable relative accuracy near
// 1e-15 e^{y^2} / |w(z)|; callers wanting 1e-10 must keep Im z >= -2 (or
// |Re z| small, as in the frozen deep reflection rows).
inline Complex faddeeva_ref(Complex z) {
  double peak = std::max(0.0, -z.imag());
  auto f = [&](double s) {
    return std::exp(Complex(-s * s, 0.0) + 2.0 * Complex(0.0, 1.0) * z * s);
  };
  return 2.0 / std::sqrt(kPi) *
         integrate(f, 0.0, peak + 7.0, 1e-14 * std::exp(peak * peak), 40);
}

// Gaussian density on the real line.
inline double gauss_density(double h, double omega0, double w) {
  return std::sqrt(h / kPi) * std::exp(-h * (w - omega0) * (w - omega0));
}

// Reference for the Gaussian Cauchy integral off the axis (no jump term).
inline Complex cauchy_gauss_ref(Complex lambda, double h, double omega0,
                                double tol = 1e-13) {
  double half = 40.0 / std::sqrt(h);
  auto f = [&](double w) {
    return gauss_density(h, omega0, w) / (lambda - Complex(0.0, 1.0) * w);
  };
  return integrate(f, omega0 - half, omega0 + half, tol, 52);
}

// Reference for the exponential-family pairing off the axis (right integral;
// callers add the jump for the left half-plane when needed).
inline Complex pairing_exp_ref(Complex lambda, double a, double h,
                               double omega0, double tol = 1e-13) {
  double half = 40.0 / std::sqrt(h);
  auto f = [&](double w) {
    return std::exp(Complex(0.0, a * w)) * gauss_density(h, omega0, w) /
           (lambda - Complex(0.0, 1.0) * w);
  };
  return integrate(f, omega0 - half, omega0 + half, tol, 52);
}

// Taylor coefficients of an analytic function around z0 from trapezoid
// samples on a circle of radius rho (only touches points on the circle).
inline std::vector<Complex> taylor_from_circle(
    const std::function<Complex(Complex)>& f, Complex z0, double rho,
    int n_terms, int n_samples = 512) {
  std::vector<Complex> vals(n_samples);
  for (int j = 0; j < n_samples; ++j) {
    double th = 2.0 * kPi * j / n_samples;
    vals[j] = f(z0 + rho * std::exp(Complex(0.0, th)));
  }
  std::vector<Complex> c(n_terms);
  for (int m = 0; m < n_terms; ++m) {
    Complex acc(0.0, 0.0);
    for (int j = 0; j < n_samples; ++j) {
      double th = 2.0 * kPi * j / n_samples;
      acc += vals[j] * std::exp(Complex(0.0, -m * th));
    }
    c[m] = acc / static_cast<double>(n_samples) / std::pow(rho, m);
  }
  return c;
}

inline Complex taylor_eval(const std::vector<Complex>& c, Complex dz) {
  Complex acc(0.0, 0.0);
  for (std::size_t m = c.size(); m-- > 0;) acc = acc * dz + c[m];
  return acc;
}

// Analytic continuation of a function known only for Re z > 0 to a target
// with Re z < 0, by a Taylor series around z0 = 0.26 + i Im(target) computed
// from a circle that stays strictly inside the right half-plane. The series
// of an entire function converges at the target; sampling noise grows like
// (d / rho)^m, so targets are limited to Re >= -0.2 for ~1e-8 absolute
// accuracy. `right_eval` must be valid for Re z > 0.
inline Complex continue_left(const std::function<Complex(Complex)>& right_eval,
                             Complex target) {
  Complex z0(0.26, target.imag());
  auto c0 = taylor_from_circle(right_eval, z0, 0.25, 26);
  return taylor_eval(c0, target - z0);
}

}  // namespace oracle
