#include "respoles/poles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <exception>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#ifdef RESPOLES_HAS_OPENMP
#include <omp.h>
#endif

#include "respoles/dispersion.hpp"
#include "respoles/errors.hpp"
#include "respoles/log.hpp"
#include "respoles/specialfn.hpp"

namespace respoles {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr Complex kI(0.0, 1.0);

// |F| at or below this value on a box boundary raises ZeroOnBoundary.
constexpr double kBoundaryFloorLog = -18.420680743952367;  // ln(1e-8)

// Adaptive phase samples allowed per edge.
constexpr int kEdgeBudget = 1 << 22;

// Exponent margin at which the continuation jump term dominates F beyond
// machine precision, so boundary phase can be integrated from its closed
// form instead of sampled values.
constexpr double kDominantExp = 40.0;

// Below this dominance exponent the jump term is too small to rotate the
// phase of F faster than sampling can follow.
constexpr double kSubdominantExp = -15.0;

// Segments shorter than this fraction of their edge carry less than pi/2 of
// phase under any representable growth rate, so wrapped steps are trusted.
constexpr double kSegmentFloor = 1e-12;

// Split positions tried in order when a subdivision line lands on a zero.
constexpr double kSplitFractions[] = {0.5, 0.47, 0.53, 0.44, 0.56, 0.41, 0.59};

std::string describe(Complex z) {
  std::ostringstream os;
  os << "(" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

// Phase tracking along one straight boundary edge. The winding contribution
// is the unwrapped change of arg F from a to b. Where the continuation jump
// dominates F (dominance exponent >= kDominantExp) the phase comes from the
// closed form of the dominant term; across the transition band the segment
// is split structurally, because wrapped phase steps can alias whole turns
// there; everywhere else samples of gen_char_log are refined until adjacent
// phase steps drop below pi/2.
class EdgePhase {
 public:
  EdgePhase(const SystemParams& p, Complex a, Complex b)
      : p_(p), a_(a), step_(b - a) {
    Complex u = a - kI * p.omega0;
    // E(t) = h Re((lambda(t) - i omega0)^2), quadratic in t.
    e0_ = p.h * (u * u).real();
    e1_ = 2.0 * p.h * (u * step_).real();
    e2_ = p.h * (step_ * step_).real();
    // D(t) = E(t) - Re(lambda(t)) tau + log(|k| sqrt(h pi)): log magnitude
    // of the jump term relative to the order-one parts of F.
    double lk = p.k == 0.0 ? 0.0 : std::log(std::abs(p.k) * std::sqrt(p.h * kPi));
    d0_ = e0_ - a.real() * p.tau + lk;
    d1_ = e1_ - step_.real() * p.tau;
    d2_ = e2_;
  }

  double total_change() {
    int initial = initial_intervals();
    double sum = 0.0;
    double t_prev = 0.0;
    double ph_prev = sample(0.0);
    for (int i = 1; i <= initial; ++i) {
      double t = static_cast<double>(i) / initial;
      double ph = sample(t);
      sum += segment_change(t_prev, ph_prev, t, ph, 0);
      t_prev = t;
      ph_prev = ph;
    }
    return sum;
  }

 private:
  int initial_intervals() const {
    double len = std::abs(step_);
    int n = static_cast<int>(std::ceil(4.0 * len));
    return std::clamp(n, 8, 512);
  }

  Complex point(double t) const { return a_ + step_ * t; }

  static double quad_at(double q0, double q1, double q2, double t) {
    return q0 + t * (q1 + t * q2);
  }

  static double quad_min(double q0, double q1, double q2, double t0,
                         double t1) {
    double lo = std::min(quad_at(q0, q1, q2, t0), quad_at(q0, q1, q2, t1));
    if (q2 > 0.0) {
      double ts = -q1 / (2.0 * q2);
      if (ts > t0 && ts < t1) lo = std::min(lo, quad_at(q0, q1, q2, ts));
    }
    return lo;
  }

  static double quad_max(double q0, double q1, double q2, double t0,
                         double t1) {
    double hi = std::max(quad_at(q0, q1, q2, t0), quad_at(q0, q1, q2, t1));
    if (q2 < 0.0) {
      double ts = -q1 / (2.0 * q2);
      if (ts > t0 && ts < t1) hi = std::max(hi, quad_at(q0, q1, q2, ts));
    }
    return hi;
  }

  bool analytic_segment(double t0, double t1) const {
    if (p_.k == 0.0) return false;
    if (point(t0).real() >= 0.0 || point(t1).real() >= 0.0) return false;
    return quad_min(e0_, e1_, e2_, t0, t1) >= kDominantExp &&
           quad_min(d0_, d1_, d2_, t0, t1) >= kDominantExp;
  }

  // True when part of the segment carries a jump term strong enough to turn
  // the phase of F by more than pi/2, which wrapped sampling cannot resolve.
  // The turn budget bounds |d/ds arg of the jump| = |-tau + 2 h d| over the
  // segment (|d| is convex, so its maximum sits at an endpoint).
  bool must_split(double t0, double t1) const {
    if (p_.k == 0.0) return false;
    if (point(t0).real() >= 0.0 && point(t1).real() >= 0.0) return false;
    if (quad_max(d0_, d1_, d2_, t0, t1) < kSubdominantExp) return false;
    double dmax = std::max(std::abs(point(t0) - kI * p_.omega0),
                           std::abs(point(t1) - kI * p_.omega0));
    double turn =
        (t1 - t0) * std::abs(step_) * (p_.tau + 2.0 * p_.h * dmax);
    return turn >= 0.5 * kPi;
  }

  // Unwrapped phase change of the dominant term
  // -k sqrt(h pi) e^{-lambda tau + h (lambda - i omega0)^2}.
  double analytic_change(double t0, double t1) const {
    Complex la = point(t0), lb = point(t1);
    Complex da = la - kI * p_.omega0, db = lb - kI * p_.omega0;
    return (-(lb - la) * p_.tau + p_.h * (db * db - da * da)).imag();
  }

  double sample(double t) {
    Complex lf = gen_char_log(point(t), p_);
    if (lf.real() <= kBoundaryFloorLog)
      throw ZeroOnBoundary("count_zeros: |F| <= 1e-8 at boundary point " +
                           describe(point(t)));
    return lf.imag();
  }

  double segment_change(double t0, double ph0, double t1, double ph1,
                        int depth) {
    if (analytic_segment(t0, t1)) return analytic_change(t0, t1);
    double d = std::remainder(ph1 - ph0, 2.0 * kPi);
    bool trusted = t1 - t0 <= kSegmentFloor || !must_split(t0, t1);
    if (trusted && std::abs(d) < 0.5 * kPi) return d;
    if (budget_ <= 0)
      throw NonIntegerWinding("count_zeros: edge sample budget exhausted near " +
                              describe(point(t0)));
    double tm = 0.5 * (t0 + t1);
    if (!(tm > t0 && tm < t1) || depth > 60)
      throw NonIntegerWinding(
          "count_zeros: phase step will not settle below pi/2 near " +
          describe(point(t0)));
    --budget_;
    double phm = sample(tm);
    return segment_change(t0, ph0, tm, phm, depth + 1) +
           segment_change(tm, phm, t1, ph1, depth + 1);
  }

  const SystemParams& p_;
  Complex a_;
  Complex step_;
  double e0_ = 0.0, e1_ = 0.0, e2_ = 0.0;
  double d0_ = 0.0, d1_ = 0.0, d2_ = 0.0;
  int budget_ = kEdgeBudget;
};

ContourBox validated(const ContourBox& box) {
  box.validate();
  return box;
}

}  // namespace

std::vector<Complex> lambert_roots(const SystemParams& p, int branch_lo,
                                   int branch_hi) {
  p.validate();
  if (p.k == 0.0)
    throw ValidationError("lambert_roots: k must be nonzero");
  if (branch_lo > branch_hi) return {};
  Complex zeta =
      0.5 * p.k * p.tau * std::exp(Complex(0.0, -p.omega0 * p.tau));
  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(branch_hi - branch_lo + 1));
  for (int n = branch_lo; n <= branch_hi; ++n) {
    Complex root = kI * p.omega0 + lambert_w(n, zeta) / p.tau;
    double resid = std::abs(char_identical(root, p));
    if (!(resid < 1e-10)) {
      std::ostringstream os;
      os << "lambert_roots: branch " << n << " root " << describe(root)
         << " leaves residual " << resid;
      throw NoConvergence(os.str());
    }
    roots.push_back(root);
  }
  return roots;
}

int count_zeros(const ContourBox& box, const SystemParams& p) {
  box.validate();
  p.validate();
  Complex bl(box.re_min, box.im_min), br(box.re_max, box.im_min);
  Complex tr(box.re_max, box.im_max), tl(box.re_min, box.im_max);
  double change = EdgePhase(p, bl, br).total_change() +
                  EdgePhase(p, br, tr).total_change() +
                  EdgePhase(p, tr, tl).total_change() +
                  EdgePhase(p, tl, bl).total_change();
  double winding = change / (2.0 * kPi);
  double rounded = std::round(winding);
  if (std::abs(winding - rounded) > 0.25) {
    std::ostringstream os;
    os << "count_zeros: winding " << winding << " is not near an integer";
    throw NonIntegerWinding(os.str());
  }
  if (rounded < 0.0) {
    std::ostringstream os;
    os << "count_zeros: negative winding " << winding
       << " for an analytic function";
    throw NonIntegerWinding(os.str());
  }
  return static_cast<int>(rounded);
}

Pole refine_newton(Complex seed, const SystemParams& p, double tol) {
  p.validate();
  if (!is_finite(seed))
    throw ValidationError("refine_newton: seed must be finite");
  if (!(tol > 0.0))
    throw ValidationError("refine_newton: tol must be > 0");
  Complex lam = seed;
  Complex f = gen_char(lam, p);
  int iters = 0;
  while (!(std::abs(f) < tol)) {
    if (iters >= 50) {
      std::ostringstream os;
      os << "refine_newton: |F| = " << std::abs(f) << " after 50 iterations";
      throw NoConvergence(os.str());
    }
    Complex fp = gen_char_deriv(lam, p);
    if (std::abs(fp) <= 1e-14 * std::abs(f))
      throw DerivativeVanishes("refine_newton: F' vanishes at " +
                               describe(lam));
    Complex step = f / fp;
    if (!is_finite(step))
      throw DerivativeVanishes("refine_newton: Newton step not finite at " +
                               describe(lam));
    lam -= step;
    f = gen_char(lam, p);
    ++iters;
  }
  // Residue 1/G'(lambda) with G = (2/k) e^{lambda tau} F, so
  // G' = (2/k) e^{lambda tau} (tau F + F').
  Complex fp = gen_char_deriv(lam, p);
  Complex gp = (2.0 / p.k) * std::exp(lam * p.tau) * (p.tau * f + fp);
  Pole pole;
  pole.lambda = lam;
  pole.newton_iters = iters;
  pole.final_residual = std::abs(f);
  if (!is_finite(gp) || gp == Complex(0.0, 0.0))
    throw DerivativeVanishes(
        "refine_newton: G' is zero or non-finite at the root " +
        describe(lam));
  pole.residue = 1.0 / gp;
  if (!is_finite(pole.residue) || pole.residue == Complex(0.0, 0.0))
    throw DerivativeVanishes("refine_newton: residue at " + describe(lam) +
                             " is not finite and nonzero");
  return pole;
}

ContourBox default_pole_region(const SystemParams& p, int n_branches) {
  p.validate();
  if (n_branches < 1)
    throw ValidationError("default_pole_region: n_branches must be >= 1");
  double left = -std::min(3.0, std::sqrt(600.0 / p.h));
  double half_height = (2.0 * kPi / p.tau) * n_branches;
  return validated(ContourBox{left, 1.0, p.omega0 - half_height,
                              p.omega0 + half_height});
}

namespace {

void sort_poles(std::vector<Pole>& poles) {
  std::sort(poles.begin(), poles.end(), [](const Pole& a, const Pole& b) {
    if (a.lambda.real() != b.lambda.real())
      return a.lambda.real() > b.lambda.real();
    return a.lambda.imag() < b.lambda.imag();
  });
}

std::vector<Pole> dedup_poles(std::vector<Pole> poles, double radius) {
  sort_poles(poles);
  std::vector<Pole> out;
  for (const auto& q : poles) {
    bool dup = false;
    for (const auto& kept : out)
      if (std::abs(kept.lambda - q.lambda) <= radius) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(q);
  }
  return out;
}

// Newton start for a box whose center sits beyond the continuation
// overflow wall: pull the real part back to the curve where the jump
// exponent is a representable 400.
Complex overflow_restart(const ContourBox& box, const SystemParams& p) {
  Complex c = box.center();
  double dy = c.imag() - p.omega0;
  double x = -std::sqrt(400.0 / p.h + dy * dy);
  x = std::clamp(x, box.re_min, box.re_max);
  return Complex(x, c.imag());
}

class BoxSearch {
 public:
  BoxSearch(const SystemParams& p, const FindPolesOptions& opts,
            std::vector<Pole> candidates)
      : p_(p), opts_(opts), candidates_(std::move(candidates)) {}

  std::vector<Pole> resolve(const ContourBox& box, int depth) {
    int count = count_zeros(box, p_);
    std::vector<Pole> inside;
    for (const auto& q : candidates_)
      if (box.contains(q.lambda)) inside.push_back(q);
    if (count == 0) {
      for (const auto& q : inside)
        log_warn("find_poles: dropping candidate " + describe(q.lambda) +
                 " inside a zero-count box");
      return {};
    }
    if (count == 1) {
      if (inside.size() == 1) return {inside.front()};
      if (inside.empty()) {
        auto found = newton_in_box(box);
        if (found) return {*found};
      }
    }
    return subdivide(box, count, depth);
  }

 private:
  std::optional<Pole> newton_in_box(const ContourBox& box) {
    Complex start = box.center();
    for (int attempt = 0; attempt < 2; ++attempt) {
      try {
        Pole q = refine_newton(start, p_, opts_.newton_tol);
        if (!box.contains(q.lambda)) return std::nullopt;
        candidates_.push_back(q);
        return q;
      } catch (const Overflow&) {
        if (attempt == 1) return std::nullopt;
        start = overflow_restart(box, p_);
      } catch (const Error&) {
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  std::vector<Pole> subdivide(const ContourBox& box, int count, int depth) {
    if (depth >= opts_.max_depth) {
      std::ostringstream os;
      os << "find_poles: box [" << box.re_min << ", " << box.re_max
         << "] x [" << box.im_min << ", " << box.im_max << "] with count "
         << count << " not resolved after " << opts_.max_depth << " levels";
      throw SubdivisionLimit(os.str());
    }
    bool split_re = box.width() >= box.height();
    for (double frac : kSplitFractions) {
      ContourBox lo = box, hi = box;
      if (split_re) {
        double cut = box.re_min + frac * box.width();
        lo.re_max = cut;
        hi.re_min = cut;
      } else {
        double cut = box.im_min + frac * box.height();
        lo.im_max = cut;
        hi.im_min = cut;
      }
      try {
        std::vector<Pole> merged = resolve(lo, depth + 1);
        std::vector<Pole> right = resolve(hi, depth + 1);
        merged.insert(merged.end(), right.begin(), right.end());
        if (static_cast<int>(merged.size()) != count) {
          std::ostringstream os;
          os << "find_poles: children yield " << merged.size()
             << " poles where the parent box counts " << count;
          throw NonIntegerWinding(os.str());
        }
        return merged;
      } catch (const ZeroOnBoundary& e) {
        log_debug(std::string("find_poles: shifting split line: ") + e.what());
        continue;
      }
    }
    throw ZeroOnBoundary(
        "find_poles: every candidate split line passes near a zero");
  }

  const SystemParams& p_;
  const FindPolesOptions& opts_;
  std::vector<Pole> candidates_;
};

std::vector<Pole> find_poles_once(const SystemParams& p,
                                  const ContourBox& region,
                                  const FindPolesOptions& opts) {
  struct Seed {
    Complex root;
    int branch;
  };
  std::vector<Seed> seeds;
  if (opts.branch_lo <= opts.branch_hi) {
    ContourBox wide = region.inflated(0.1);
    std::vector<Complex> roots =
        lambert_roots(p, opts.branch_lo, opts.branch_hi);
    for (int n = opts.branch_lo; n <= opts.branch_hi; ++n) {
      Complex r = roots[static_cast<std::size_t>(n - opts.branch_lo)];
      if (wide.contains(r)) seeds.push_back({r, n});
    }
  }

  std::vector<std::optional<Pole>> slots(seeds.size());
  auto refine_slot = [&](std::size_t i) {
    try {
      Pole q = refine_newton(seeds[i].root, p, opts.newton_tol);
      q.seed_branch = seeds[i].branch;
      if (region.contains(q.lambda)) slots[i] = q;
    } catch (const Error& e) {
      std::ostringstream os;
      os << "find_poles: seed branch " << seeds[i].branch << " dropped: "
         << e.what();
      log_debug(os.str());
    } catch (const std::exception& e) {
      log_warn(std::string("find_poles: seed refinement failed: ") + e.what());
    }
  };
#ifdef RESPOLES_HAS_OPENMP
  if (opts.jobs > 1) {
#pragma omp parallel for schedule(static) num_threads(opts.jobs)
    for (std::size_t i = 0; i < slots.size(); ++i) refine_slot(i);
  } else {
    for (std::size_t i = 0; i < slots.size(); ++i) refine_slot(i);
  }
#else
  for (std::size_t i = 0; i < slots.size(); ++i) refine_slot(i);
#endif

  std::vector<Pole> refined;
  for (const auto& s : slots)
    if (s) refined.push_back(*s);
  refined = dedup_poles(std::move(refined), opts.dedup_radius);

  BoxSearch search(p, opts, std::move(refined));
  std::vector<Pole> confirmed = search.resolve(region, 0);
  confirmed = dedup_poles(std::move(confirmed), opts.dedup_radius);
  sort_poles(confirmed);
  return confirmed;
}

}  // namespace

std::vector<Pole> find_poles(const SystemParams& p, const ContourBox& region,
                             const FindPolesOptions& opts) {
  p.validate();
  region.validate();
  if (!(opts.newton_tol > 0.0))
    throw ValidationError("find_poles: newton_tol must be > 0");
  if (opts.max_depth < 1)
    throw ValidationError("find_poles: max_depth must be >= 1");
  if (!(opts.dedup_radius >= 0.0))
    throw ValidationError("find_poles: dedup_radius must be >= 0");
  if (p.k == 0.0) return {};

  for (int attempt = 0;; ++attempt) {
    ContourBox work =
        attempt == 0 ? region : region.inflated(0.01 * attempt);
    try {
      return find_poles_once(p, work, opts);
    } catch (const ZeroOnBoundary& e) {
      if (attempt >= 5) throw;
      log_info(std::string("find_poles: inflating region after: ") + e.what());
    }
  }
}

}  // namespace respoles
