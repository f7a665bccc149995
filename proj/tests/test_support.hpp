#pragma once

#include <cmath>
#include <complex>

#include "qgraph/linalg.hpp"

namespace qgraph::testing {

inline const double kRt2 = std::sqrt(2.0);

inline Matrix sigma1() { return Matrix::from_rows({{0, 1}, {1, 0}}); }
inline Matrix sigma2() { return Matrix::from_rows({{0, -kI}, {kI, 0}}); }
inline Matrix sigma3() { return Matrix::from_rows({{1, 0}, {0, -1}}); }

/// Hand-written 4x4 from real rows.
inline Matrix real_rows(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<cplx>> out;
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return Matrix::from_rows(out);
}

}  // namespace qgraph::testing
