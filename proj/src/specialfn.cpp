#include "respoles/specialfn.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "respoles/errors.hpp"

namespace respoles {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInvSqrtPi = 0.56418958354775628695;
constexpr Complex kI(0.0, 1.0);

constexpr int kWeidemanN = 48;

// Fourier coefficients of the Weideman rational approximation, computed once
// in extended precision from 8N equispaced samples of
// G(theta) = (L^2 + t^2) e^{-t^2}, t = L tan(theta/2), with G(+-pi) = 0.
const std::array<double, kWeidemanN>& weideman_coeffs() {
  static const std::array<double, kWeidemanN> coeffs = [] {
    constexpr int n = kWeidemanN;
    constexpr int m2 = 8 * n;
    const long double pi_l = 3.141592653589793238462643383279502884L;
    const long double big_l = sqrtl(n / sqrtl(2.0L));
    std::vector<long double> g(m2, 0.0L);
    std::vector<long double> theta(m2);
    for (int j = 0; j < m2; ++j) {
      theta[j] = -pi_l + 2.0L * pi_l * j / m2;
      if (j == 0) continue;
      long double t = big_l * tanl(theta[j] / 2.0L);
      g[j] = (big_l * big_l + t * t) * expl(-t * t);
    }
    std::array<double, n> out{};
    for (int m = 1; m <= n; ++m) {
      long double s = 0.0L;
      for (int j = 0; j < m2; ++j) s += g[j] * cosl(m * theta[j]);
      out[m - 1] = static_cast<double>(s / m2);
    }
    return out;
  }();
  return coeffs;
}

// Rational approximation for the closed upper half-plane, |z| < 6.
Complex faddeeva_weideman(Complex z) {
  const auto& a = weideman_coeffs();
  const double big_l = std::sqrt(kWeidemanN / std::sqrt(2.0));
  Complex iz = kI * z;
  Complex denom = big_l - iz;
  Complex q = (big_l + iz) / denom;
  Complex p(0.0, 0.0);
  for (int m = kWeidemanN - 1; m >= 0; --m) p = p * q + a[m];
  return 2.0 * p / (denom * denom) + kInvSqrtPi / denom;
}

// Laplace continued fraction for the closed upper half-plane, |z| >= 6.
Complex faddeeva_cfrac(Complex z) {
  double r = std::abs(z);
  int depth;
  if (r < 7.0)
    depth = 14;
  else if (r < 8.0)
    depth = 11;
  else if (r < 10.0)
    depth = 9;
  else if (r < 12.0)
    depth = 8;
  else if (r < 15.0)
    depth = 7;
  else if (r < 25.0)
    depth = 6;
  else
    depth = 5;
  Complex f(0.0, 0.0);
  for (int n = depth; n >= 1; --n) f = (0.5 * n) / (z - f);
  return kI * kInvSqrtPi / (z - f);
}

Complex faddeeva_upper(Complex z) {
  return std::abs(z) < 6.0 ? faddeeva_weideman(z) : faddeeva_cfrac(z);
}

Complex lambert_series_branch_point(Complex p) {
  return -1.0 +
         p * (1.0 + p * (-1.0 / 3.0 +
                         p * (11.0 / 72.0 + p * (-43.0 / 540.0))));
}

Complex lambert_series_short(Complex p) {
  return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
}

// De Bruijn-style seed from the logarithm of the target branch.
Complex lambert_asymptotic(int branch, Complex z) {
  Complex l1 = std::log(z) + Complex(0.0, 2.0 * kPi * branch);
  Complex l2 = std::log(l1);
  return l1 - l2 + l2 / l1;
}

Complex lambert_seed(int branch, Complex z) {
  Complex ez1 = std::exp(1.0) * z + 1.0;
  if (branch == 0) {
    if (std::abs(z) < 0.25)
      return z * (1.0 + z * (-1.0 + z * (1.5 - (8.0 / 3.0) * z)));
    if (std::abs(ez1) < 0.8) return lambert_series_short(std::sqrt(2.0 * ez1));
    if (z.real() < -std::exp(-1.0) &&
        std::abs(z.imag()) < 0.5 * std::abs(z.real()))
      return lambert_asymptotic(0, z);
    if (std::abs(z) < 4.0) return std::log(1.0 + z);
    return lambert_asymptotic(0, z);
  }
  if (branch == -1 && z.imag() == 0.0 && z.real() < 0.0 &&
      z.real() >= -std::exp(-1.0)) {
    if (std::abs(ez1) < 0.5)
      return lambert_series_short(-std::sqrt(2.0 * ez1));
    Complex lz = std::log(-z.real());
    return lz - std::log(-lz);
  }
  if (((branch == -1 && z.imag() >= 0.0) ||
       (branch == 1 && z.imag() < 0.0)) &&
      std::abs(ez1) < 0.5)
    return lambert_series_short(-std::sqrt(2.0 * ez1));
  return lambert_asymptotic(branch, z);
}

}  // namespace

Complex faddeeva(Complex z) {
  if (z == Complex(0.0, 0.0)) return Complex(1.0, 0.0);
  if (z.imag() >= 0.0) return faddeeva_upper(z);
  double growth = z.imag() * z.imag() - z.real() * z.real();
  if (growth > 700.0)
    throw Overflow("faddeeva reflection term exp(-z^2) overflows", growth);
  return 2.0 * std::exp(-z * z) - faddeeva_upper(-z);
}

Complex faddeeva_deriv(Complex z) {
  return -2.0 * z * faddeeva(z) + Complex(0.0, 2.0 * kInvSqrtPi);
}

Complex lambert_w(int branch, Complex z) {
  if (z == Complex(0.0, 0.0)) {
    if (branch == 0) return Complex(0.0, 0.0);
    throw BranchDomain("lambert_w branch " + std::to_string(branch) +
                       " is singular at z = 0");
  }

  Complex w;
  Complex ez1 = std::exp(1.0) * z + 1.0;
  if (std::abs(branch) <= 1 && std::abs(ez1) < 1e-8) {
    Complex p = std::sqrt(2.0 * ez1);
    if ((branch == -1 && z.imag() >= 0.0) ||
        (branch == 1 && z.imag() < 0.0))
      p = -p;
    w = lambert_series_branch_point(p);
  } else {
    w = lambert_seed(branch, z);
  }

  const double tol = 1e-13 * std::max(1.0, std::abs(z));
  Complex f(0.0, 0.0);
  bool converged = false;
  for (int iter = 0; iter < 60; ++iter) {
    Complex ew = std::exp(w);
    f = w * ew - z;
    if (std::abs(f) <= 0.1 * tol) {
      converged = true;
      break;
    }
    Complex wp1 = w + 1.0;
    Complex two_wp1 = 2.0 * wp1;
    Complex step;
    if (std::abs(two_wp1) > 1e-12)
      step = f / (ew * wp1 - (w + 2.0) * f / two_wp1);
    else
      step = f / (ew * wp1);
    w -= step;
  }
  if (!converged) {
    Complex ew = std::exp(w);
    f = w * ew - z;
    if (!(std::abs(f) <= tol))
      throw NoConvergence("lambert_w Halley iteration stalled at branch " +
                          std::to_string(branch));
  }
  return w;
}

Complex gaussian_density_complex(double h, double omega0, Complex zeta) {
  if (!(h > 0.0) || !std::isfinite(h))
    throw ValidationError("gaussian density width h must be positive");
  Complex d = zeta - omega0;
  Complex expo = -h * d * d;
  if (expo.real() > 700.0)
    throw Overflow("gaussian density exponent overflows", expo.real());
  return std::sqrt(h / kPi) * std::exp(expo);
}

}  // namespace respoles
