#include "aftlab/core/linalg.hpp"

#include <cmath>
#include <cstddef>

#include "aftlab/core/error.hpp"

namespace aftlab {

std::vector<double> solve_linear(Matrix a, std::vector<double> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw NumericalError("solve_linear: shape mismatch");

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > best) {
        best = std::abs(a(r, col));
        pivot = r;
      }
    }
    if (!(best > 1e-300)) throw NumericalError("solve_linear: singular system");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
      std::swap(b[col], b[pivot]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      if (f == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
      b[r] -= f * b[col];
    }
  }

  std::vector<double> x(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

std::vector<double> ridge_least_squares(const Matrix& x, const std::vector<double>& y,
                                        double ridge) {
  const std::size_t n = x.rows();
  const std::size_t d = x.cols();
  if (y.size() != n) throw NumericalError("ridge_least_squares: shape mismatch");

  Matrix xtx(d, d);
  std::vector<double> xty(d, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    auto row = x.row(r);
    for (std::size_t i = 0; i < d; ++i) {
      xty[i] += row[i] * y[r];
      for (std::size_t j = i; j < d; ++j) xtx(i, j) += row[i] * row[j];
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    xtx(i, i) += ridge;
    for (std::size_t j = 0; j < i; ++j) xtx(i, j) = xtx(j, i);
  }
  return solve_linear(std::move(xtx), std::move(xty));
}

}  // namespace aftlab
