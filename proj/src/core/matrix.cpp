#include "aftlab/core/matrix.hpp"

#include <algorithm>

namespace aftlab {

Matrix gather_rows(const Matrix& m, const std::vector<int>& idx) {
  Matrix out(idx.size(), m.cols());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    auto src = m.row(static_cast<std::size_t>(idx[i]));
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return out;
}

}  // namespace aftlab
