#include "respoles/dispersion.hpp"

#include <cmath>
#include <string>

#include "respoles/errors.hpp"
#include "respoles/quadrature.hpp"
#include "respoles/specialfn.hpp"

namespace respoles {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr Complex kI(0.0, 1.0);

// Exponent threshold above which gen_char_log switches to the closed-form
// dominant term; kept below the representability limit (700) so the switch
// happens while gen_char is still finite.
constexpr double kLogSwitch = 600.0;

double jump_exponent(Complex lambda, const SystemParams& p) {
  Complex d = lambda - kI * p.omega0;
  return p.h * (d * d).real();
}

Complex real_line_density(double omega, const SystemParams& p) {
  double d = omega - p.omega0;
  return Complex(std::sqrt(p.h / kPi) * std::exp(-p.h * d * d), 0.0);
}

// Plemelj boundary value from the right for the pairing with data
// f(omega) = e^{i a omega} g(omega) at lambda = i y:
//   -i p.v. int f(omega)/(y - omega) domega + pi f(y).
Complex pairing_axis_value(double y, double a, const SystemParams& p) {
  double width = 40.0 / std::sqrt(p.h);
  auto f = [&](double omega) {
    return std::exp(Complex(0.0, a * omega)) * real_line_density(omega, p);
  };
  if (std::abs(y - p.omega0) > width) {
    // The singular point carries weight below e^{-1600}; the plain integral
    // is already the boundary value.
    Complex lambda(0.0, y);
    auto plain = [&](double omega) { return f(omega) / (lambda - kI * omega); };
    return integrate_adaptive(plain, p.omega0 - width, p.omega0 + width);
  }
  double half = std::max(width, std::abs(y - p.omega0) + 10.0 / std::sqrt(p.h));
  double lo = p.omega0 - half, hi = p.omega0 + half;
  Complex fy = f(y);
  Complex fy_deriv = (Complex(0.0, a) - 2.0 * p.h * (y - p.omega0)) * fy;
  auto regular = [&](double omega) {
    if (std::abs(omega - y) < 1e-8 * (1.0 + std::abs(y))) return -fy_deriv;
    return (f(omega) - fy) / (y - omega);
  };
  Complex pv = integrate_adaptive(regular, lo, hi) +
               fy * std::log((y - lo) / (hi - y));
  return -kI * pv + kPi * fy;
}

}  // namespace

Complex char_identical(Complex lambda, const SystemParams& p) {
  p.validate();
  double expo = -lambda.real() * p.tau;
  if (expo > 700.0)
    throw Overflow("char_identical delay exponential overflows", expo);
  return lambda - kI * p.omega0 - 0.5 * p.k * std::exp(-lambda * p.tau);
}

Complex cauchy_gauss(Complex lambda, const SystemParams& p) {
  p.validate();
  HalfPlaneTag tag = half_plane_tag(lambda);
  if (tag == HalfPlaneTag::Axis)
    throw OnAxis("cauchy_gauss is defined off the imaginary axis; use "
                 "continued_pairing_II for the boundary value");
  double s = tag == HalfPlaneTag::Right ? 1.0 : -1.0;
  double rt_h = std::sqrt(p.h);
  Complex u = s * kI * rt_h * (lambda - kI * p.omega0);
  return s * std::sqrt(p.h * kPi) * faddeeva(u);
}

Complex continued_pairing_II(Complex lambda, const SystemParams& p) {
  p.validate();
  Complex u = kI * std::sqrt(p.h) * (lambda - kI * p.omega0);
  return std::sqrt(p.h * kPi) * faddeeva(u);
}

Complex continued_pairing_II_deriv(Complex lambda, const SystemParams& p) {
  p.validate();
  Complex u = kI * std::sqrt(p.h) * (lambda - kI * p.omega0);
  return kI * p.h * std::sqrt(kPi) * faddeeva_deriv(u);
}

Complex gen_char(Complex lambda, const SystemParams& p) {
  p.validate();
  if (p.k == 0.0) return Complex(1.0, 0.0);
  return 1.0 - 0.5 * p.k * std::exp(-lambda * p.tau) *
                   continued_pairing_II(lambda, p);
}

Complex gen_char_deriv(Complex lambda, const SystemParams& p) {
  p.validate();
  if (p.k == 0.0) return Complex(0.0, 0.0);
  Complex pairing = continued_pairing_II(lambda, p);
  Complex pairing_deriv = continued_pairing_II_deriv(lambda, p);
  return 0.5 * p.k * std::exp(-lambda * p.tau) *
         (p.tau * pairing - pairing_deriv);
}

Complex gen_char_log(Complex lambda, const SystemParams& p) {
  p.validate();
  if (p.k == 0.0) return Complex(0.0, 0.0);
  if (lambda.real() < 0.0 && jump_exponent(lambda, p) > kLogSwitch) {
    // F is dominated by the continuation jump:
    // F ~ -k sqrt(h pi) e^{-lambda tau + h (lambda - i omega0)^2}, with
    // relative error below e^{-kLogSwitch}.
    Complex d = lambda - kI * p.omega0;
    Complex log_f = std::log(std::abs(p.k) * std::sqrt(p.h * kPi)) -
                    lambda * p.tau + p.h * d * d;
    if (p.k > 0.0) log_f += Complex(0.0, kPi);
    double arg = std::remainder(log_f.imag(), 2.0 * kPi);
    return Complex(log_f.real(), arg);
  }
  Complex f = gen_char(lambda, p);
  return Complex(std::log(std::abs(f)), std::arg(f));
}

Complex pairing_exp_family(Complex lambda, double a, const SystemParams& p) {
  p.validate();
  if (!(a >= 0.0) || !std::isfinite(a))
    throw ValidationError("pairing_exp_family needs a >= 0");
  if (a == 0.0) return continued_pairing_II(lambda, p);

  HalfPlaneTag tag = half_plane_tag(lambda);
  if (tag == HalfPlaneTag::Axis)
    return pairing_axis_value(lambda.imag(), a, p);

  double width = 40.0 / std::sqrt(p.h);
  auto integrand = [&](double omega) {
    return std::exp(Complex(0.0, a * omega)) * real_line_density(omega, p) /
           (lambda - kI * omega);
  };
  Complex value =
      integrate_adaptive(integrand, p.omega0 - width, p.omega0 + width);
  if (tag == HalfPlaneTag::Left) {
    Complex d = lambda - kI * p.omega0;
    Complex expo = a * lambda + p.h * d * d;
    if (expo.real() > 700.0)
      throw Overflow("pairing_exp_family jump term overflows", expo.real());
    value += 2.0 * std::sqrt(p.h * kPi) * std::exp(expo);
  }
  return value;
}

}  // namespace respoles
