#include "qgraph/random.hpp"

#include <cmath>

namespace qgraph {

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (auto& z : m.data()) {
    const double re = g(rng);
    const double im = g(rng);
    z = {re, im};
  }
  return m;
}

Vector random_vector(Rng& rng, std::size_t n) {
  const Matrix m = random_matrix(rng, n, 1);
  return {m.data().begin(), m.data().end()};
}

Matrix random_hermitian(Rng& rng, std::size_t n) {
  const Matrix g = random_matrix(rng, n, n);
  return 0.5 * (g + g.adjoint());
}

Matrix random_unitary(Rng& rng, std::size_t n) {
  const Matrix g = random_matrix(rng, n, n);
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < n; ++c) cols.push_back(g.column(c));
  gram_schmidt(cols, 1e-12);
  Matrix u(n, n);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) u(r, c) = cols[c][r];
  return u;
}

Matrix random_special_unitary(Rng& rng, std::size_t n) {
  Matrix u = random_unitary(rng, n);
  // det(u) is a phase; dividing the first column by it gives det 1.
  Matrix lu = u;
  cplx det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(lu(r, k)) > std::abs(lu(piv, k))) piv = r;
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(k, c), lu(piv, c));
      det = -det;
    }
    det *= lu(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const cplx f = lu(r, k) / lu(k, k);
      for (std::size_t c = k; c < n; ++c) lu(r, c) -= f * lu(k, c);
    }
  }
  const cplx phase = det / std::abs(det);
  for (std::size_t r = 0; r < n; ++r) u(r, 0) /= phase;
  return u;
}

}  // namespace qgraph
