#pragma once

#include <functional>

#include "respoles/types.hpp"

namespace respoles {

// Adaptive panel integration of a complex-valued integrand over [a, b].
// Each panel is evaluated with nested 7- and 15-point Gauss-Legendre rules;
// the panel with the largest rule difference is bisected until the summed
// error estimate meets the mixed tolerance tol * (1 + |integral|). Throws
// QuadratureFailure when the estimate is still above
// fail_tol * (1 + |integral|) after max_panels panels.
Complex integrate_adaptive(const std::function<Complex(double)>& f, double a,
                           double b, double tol = 1e-10, double fail_tol = 1e-9,
                           int max_panels = 4000);

}  // namespace respoles
