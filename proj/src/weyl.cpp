#include "qgraph/weyl.hpp"

#include <cmath>

#include "qgraph/errors.hpp"

namespace qgraph {

namespace {

void require_n(int n, const char* what) {
  if (n < 2) throw InvalidInput(std::string(what) + ": n must be at least 2");
}

std::size_t mod(long long x, int n) { return static_cast<std::size_t>(((x % n) + n) % n); }

}  // namespace

Bicharacter weyl_bicharacter(int n) {
  require_n(n, "weyl_bicharacter");
  const AbelianGroup g({n, n});
  const Matrix gen = Matrix::from_rows({{1.0, 1.0}, {root_of_unity(1, n), 1.0}});
  return make_bicharacter(g, gen);
}

WeylData phi_isomorphism(int n) {
  require_n(n, "phi_isomorphism");
  WeylData w;
  w.n = n;
  w.omega = root_of_unity(1, n);
  w.group = AbelianGroup({n, n});
  w.twisted = twist_quantum_set(weyl_bicharacter(n));
  w.matrix = build_quantum_set({n});
  const auto un = static_cast<std::size_t>(n);
  const std::size_t big = un * un;
  Matrix phi(big, big);
  const double inv = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j < un; ++j) {
      const std::size_t b = mod(static_cast<long long>(i) - static_cast<long long>(j), n);
      for (std::size_t a = 0; a < un; ++a) {
        phi(w.matrix->index(0, i, j), w.group.index({static_cast<int>(a), static_cast<int>(b)})) =
            root_of_unity(static_cast<long long>(i * a), n) * inv;
      }
    }
  }
  w.phi = {w.twisted, w.matrix, phi};
  w.phi_inv = {w.matrix, w.twisted, phi.adjoint()};
  return w;
}

std::vector<std::size_t> rook_generators(int n) {
  require_n(n, "rook_generators");
  const AbelianGroup g({n, n});
  std::vector<std::size_t> s;
  for (int a = 1; a < n; ++a) s.push_back(g.index({a, 0}));
  for (int b = 1; b < n; ++b) s.push_back(g.index({0, b}));
  return s;
}

Matrix rook_closed_form(int n) {
  require_n(n, "rook_closed_form");
  const auto un = static_cast<std::size_t>(n);
  Matrix a(un * un, un * un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j)
      for (std::size_t k = 0; k < un; ++k)
        for (std::size_t l = 0; l < un; ++l) {
          double v = 0.0;
          const long long d1 = static_cast<long long>(i) - static_cast<long long>(j);
          const long long d2 = static_cast<long long>(k) - static_cast<long long>(l);
          if (mod(d1, n) == mod(d2, n)) v += 1.0;
          if (i == j && j == k && k == l) v += n;
          if (i == k && j == l) v -= 2.0;
          a(i * un + j, k * un + l) = v;
        }
  return a;
}

QuantumGraph quantum_rook(int n) { return {build_quantum_set({n}), rook_closed_form(n), false}; }

Matrix rook_via_twist(const WeylData& w) {
  const auto g = twisted_cayley(w.group, rook_generators(w.n), weyl_bicharacter(w.n));
  return w.phi.matrix * g.adjacency * w.phi_inv.matrix;
}

Matrix transported_duality(const WeylData& w) {
  const Matrix& phi = w.phi.matrix;
  return phi * w.twisted->duality() * phi.transpose();
}

Matrix transported_multiplication(const WeylData& w) {
  const Matrix& phi = w.phi.matrix;
  const std::size_t big = phi.rows();
  // Nonzeros of phi by column.
  std::vector<std::vector<std::pair<std::size_t, cplx>>> cols(big);
  for (std::size_t r = 0; r < big; ++r)
    for (std::size_t c = 0; c < big; ++c)
      if (phi(r, c) != cplx{}) cols[c].push_back({r, phi(r, c)});
  Matrix out(big, big * big);
  for (const auto& e : w.twisted->mult()) {
    for (const auto& [x, px] : cols[e.p])
      for (const auto& [y, py] : cols[e.r])
        for (const auto& [z, pz] : cols[e.s]) out(x, y * big + z) += px * e.value * std::conj(py) * std::conj(pz);
  }
  return out;
}

Matrix duality_closed_form(int n) {
  const auto un = static_cast<std::size_t>(n);
  Matrix r(un * un, un * un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) r(i * un + j, j * un + i) = 1.0;
  return r;
}

Matrix multiplication_closed_form(int n) {
  const auto un = static_cast<std::size_t>(n);
  const std::size_t big = un * un;
  const double inv = 1.0 / std::sqrt(static_cast<double>(n));
  Matrix m(big, big * big);
  for (std::size_t r = 0; r < un; ++r)
    for (std::size_t j = 0; j < un; ++j)
      for (std::size_t s = 0; s < un; ++s) m(r * un + s, (r * un + j) * big + (j * un + s)) = inv;
  return m;
}

}  // namespace qgraph
