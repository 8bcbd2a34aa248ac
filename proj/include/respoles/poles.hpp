#pragma once

#include <vector>

#include "respoles/types.hpp"

namespace respoles {

// Roots of the identical-frequency characteristic function:
// lambda_n = i omega0 + W_n((k/2) tau e^{-i omega0 tau}) / tau for each
// branch n in [branch_lo, branch_hi]. Requires k != 0. Every returned root
// satisfies |char_identical| < 1e-10 (NoConvergence otherwise).
std::vector<Complex> lambert_roots(const SystemParams& p, int branch_lo,
                                   int branch_hi);

// Winding number of gen_char around the box boundary: phase of F is tracked
// along each edge with adaptive sample refinement until adjacent phase steps
// are below pi/2. Throws ZeroOnBoundary when a boundary sample has
// |F| <= 1e-8, and NonIntegerWinding when the accumulated phase is not
// within 0.25 * 2pi of an integer multiple of 2pi or refinement exhausts its
// sample budget.
int count_zeros(const ContourBox& box, const SystemParams& p);

// Newton refinement of a pole seed on F until |F| < tol (default 1e-11) or
// 50 steps. The residue weight is 1 / G'(lambda_p) with
// G(lambda) = (2/k) e^{lambda tau} - continued_pairing_II(lambda). Throws
// NoConvergence and DerivativeVanishes.
Pole refine_newton(Complex seed, const SystemParams& p, double tol = 1e-11);

struct FindPolesOptions {
  // Lambert-seed branch range; set branch_lo > branch_hi to disable seeding
  // and rely on box subdivision alone.
  int branch_lo = -8;
  int branch_hi = 8;
  double newton_tol = 1e-11;
  int max_depth = 12;          // recursive subdivision levels
  double dedup_radius = 1e-8;
  int jobs = 1;                // > 1 refines seeds in an OpenMP pool
};

// All zeros of gen_char inside `region`: Lambert seeds -> Newton refinement
// -> recursive argument-principle subdivision until every leaf box holds
// exactly the poles it counts -> dedup and sort by Re descending, then Im
// ascending. The returned count always equals the argument-principle count
// of the working region. When a zero sits on the region boundary the region
// is inflated by 1% (up to 5 retries); interior split lines are shifted
// instead so leaf boxes tile the region exactly.
std::vector<Pole> find_poles(const SystemParams& p, const ContourBox& region,
                             const FindPolesOptions& opts = {});

// Default search region: Re in [-min(3, sqrt(600/h)), 1] (left edge clamped
// so the continuation jump stays representable), Im in
// omega0 +- (2 pi / tau) * n_branches.
ContourBox default_pole_region(const SystemParams& p, int n_branches);

}  // namespace respoles
