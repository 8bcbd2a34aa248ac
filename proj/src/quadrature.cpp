#include "respoles/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "respoles/errors.hpp"

namespace respoles {

namespace {

constexpr double kPi = 3.14159265358979323846;

template <int N>
struct GaussRule {
  std::array<double, N> nodes;
  std::array<double, N> weights;
};

// Gauss-Legendre nodes on [-1, 1] by Newton iteration on P_N from Chebyshev
// initial guesses; weights 2 / ((1 - x^2) P_N'(x)^2).
template <int N>
GaussRule<N> make_gauss_rule() {
  GaussRule<N> rule;
  for (int i = 1; i <= N; ++i) {
    double x = std::cos(kPi * (i - 0.25) / (N + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int n = 2; n <= N; ++n) {
        double p2 = ((2 * n - 1) * x * p1 - (n - 1) * p0) / n;
        p0 = p1;
        p1 = p2;
      }
      dp = N * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i - 1] = x;
    rule.weights[i - 1] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule<7>& rule7() {
  static const GaussRule<7> r = make_gauss_rule<7>();
  return r;
}

const GaussRule<15>& rule15() {
  static const GaussRule<15> r = make_gauss_rule<15>();
  return r;
}

struct Panel {
  double a;
  double b;
  Complex value;
  double err;
};

// Paired low/high order estimates on one panel; the high-order value is kept
// and the difference is the error estimate.
Panel eval_panel(const std::function<Complex(double)>& f, double a, double b) {
  double mid = 0.5 * (a + b);
  double half = 0.5 * (b - a);
  Complex lo(0.0, 0.0), hi(0.0, 0.0);
  const auto& r7 = rule7();
  for (int i = 0; i < 7; ++i)
    lo += r7.weights[i] * f(mid + half * r7.nodes[i]);
  const auto& r15 = rule15();
  for (int i = 0; i < 15; ++i)
    hi += r15.weights[i] * f(mid + half * r15.nodes[i]);
  lo *= half;
  hi *= half;
  return Panel{a, b, hi, std::abs(hi - lo)};
}

}  // namespace

Complex integrate_adaptive(const std::function<Complex(double)>& f, double a,
                           double b, double tol, double fail_tol,
                           int max_panels) {
  if (!(b > a)) throw ValidationError("integrate_adaptive needs b > a");

  auto worse = [](const Panel& x, const Panel& y) {
    if (x.err != y.err) return x.err < y.err;
    return x.a > y.a;
  };
  std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> queue(worse);
  queue.push(eval_panel(f, a, b));
  int n_panels = 1;

  Complex total = queue.top().value;
  double total_err = queue.top().err;

  while (total_err > tol * (1.0 + std::abs(total)) && n_panels < max_panels) {
    Panel worst = queue.top();
    queue.pop();
    total -= worst.value;
    total_err -= worst.err;
    double mid = 0.5 * (worst.a + worst.b);
    Panel left = eval_panel(f, worst.a, mid);
    Panel right = eval_panel(f, mid, worst.b);
    total += left.value + right.value;
    total_err += left.err + right.err;
    queue.push(left);
    queue.push(right);
    ++n_panels;
  }

  if (total_err > fail_tol * (1.0 + std::abs(total)))
    throw QuadratureFailure("adaptive quadrature stalled at error " +
                            std::to_string(total_err) + " after " +
                            std::to_string(n_panels) + " panels");
  return total;
}

}  // namespace respoles
