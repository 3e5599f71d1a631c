#pragma once

#include <functional>

namespace aftlab {

// Adaptive Simpson integration of f over [a, b] to the given absolute
// tolerance. Deterministic; recursion capped at max_depth.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth = 60);

}  // namespace aftlab
