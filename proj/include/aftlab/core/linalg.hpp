#pragma once

#include <vector>

#include "aftlab/core/matrix.hpp"

namespace aftlab {

// Solves A x = b by Gaussian elimination with partial pivoting.
// Throws NumericalError on a (numerically) singular system.
std::vector<double> solve_linear(Matrix a, std::vector<double> b);

// Minimizes ||X w - y||^2 + ridge ||w||^2 via the normal equations.
std::vector<double> ridge_least_squares(const Matrix& x, const std::vector<double>& y,
                                        double ridge);

}  // namespace aftlab
