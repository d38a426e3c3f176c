#pragma once

#include <cmath>

#include "chanent/complex_matrix.hpp"

namespace chanent::testing {

inline double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e300;
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

inline bool matrix_close(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return max_entry_diff(a, b) <= tol;
}

}  // namespace chanent::testing
