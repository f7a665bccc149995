#include "qgraph/clifford.hpp"

#include <cmath>

#include "qgraph/errors.hpp"

namespace qgraph {

Bicharacter clifford_bicharacter(int n) {
  if (n < 1) throw InvalidInput("clifford_bicharacter: n must be at least 1");
  const auto un = static_cast<std::size_t>(n);
  Matrix gen(un, un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) gen(i, j) = i > j ? -1.0 : 1.0;
  return make_bicharacter(AbelianGroup(std::vector<int>(un, 2)), gen);
}

CliffordSet clifford_set(int n, double tol) {
  const Bicharacter sigma = clifford_bicharacter(n);
  return {n, sigma.group(), twist_quantum_set(sigma, tol)};
}

CubePreset parse_cube_preset(const std::string& name) {
  if (name == "hypercube") return CubePreset::hypercube;
  if (name == "folded") return CubePreset::folded;
  if (name == "squared") return CubePreset::squared;
  throw InvalidInput("unknown cube preset '" + name + "' (expected hypercube, folded or squared)");
}

std::vector<std::size_t> cube_generators(int n, CubePreset preset) {
  if (n < 1) throw InvalidInput("cube_generators: n must be at least 1");
  const AbelianGroup g(std::vector<int>(static_cast<std::size_t>(n), 2));
  std::vector<std::size_t> s;
  for (int i = 0; i < n; ++i) s.push_back(g.generator(static_cast<std::size_t>(i)));
  if (preset == CubePreset::folded) {
    s.push_back(g.index(GroupElement(static_cast<std::size_t>(n), 1)));
  } else if (preset == CubePreset::squared) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        GroupElement e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        e[static_cast<std::size_t>(j)] = 1;
        s.push_back(g.index(e));
      }
  }
  return s;
}

double cube_eigenvalue(int n, CubePreset preset, int d) {
  switch (preset) {
    case CubePreset::hypercube: return n - 2.0 * d;
    case CubePreset::folded: return n + 1.0 - 4.0 * std::ceil(d / 2.0);
    case CubePreset::squared: {
      const double t = n + 1.0 - 2.0 * d;
      return 0.5 * (t * t - n - 1.0);
    }
  }
  return 0.0;
}

QuantumGraph cube_like_graph(int n, CubePreset preset, double tol) {
  return cube_like_graph(n, cube_generators(n, preset), tol);
}

QuantumGraph cube_like_graph(int n, const std::vector<std::size_t>& s, double tol) {
  const Bicharacter sigma = clifford_bicharacter(n);
  return twisted_cayley(sigma.group(), s, sigma, tol);
}

Operator folded_embedding(int n) {
  const CliffordSet small = clifford_set(n);
  const CliffordSet big = clifford_set(n + 1);
  Matrix iota(big.set->N(), small.set->N());
  const double r2 = std::sqrt(2.0);
  for (std::size_t mu = 0; mu < small.set->N(); ++mu) {
    if (small.degree(mu) % 2 == 0) {
      iota(2 * mu, mu) = r2;
    } else {
      iota(2 * mu + 1, mu) = r2 * kI;
    }
  }
  return {small.set, big.set, iota};
}

Report folded_embedding_report(int n) {
  const Operator iota = folded_embedding(n);
  Report rep = check_star_homomorphism(iota, true);
  const QuantumGraph cube = cube_like_graph(n + 1, CubePreset::hypercube);
  const QuantumGraph folded = cube_like_graph(n, CubePreset::folded);
  const Matrix quotient = iota.matrix.adjoint() * cube.adjacency * iota.matrix;
  const Matrix twice = 2.0 * folded.adjacency;
  const double scale = scale_of({&quotient, &twice});
  rep.add("quotient-equals-twice-folded", max_abs_diff(quotient, twice), iota.domain->tol() * scale);
  const Vector& eta_small = iota.domain->unit();
  const Vector& eta_big = iota.codomain->unit();
  const cplx before = dot(eta_big, cube.adjacency * eta_big);
  const cplx after = dot(eta_small, quotient * eta_small);
  rep.add("edge-count-conserved", std::abs(before - after), 1e-8 * std::max(1.0, std::abs(before)));
  return rep;
}

Matrix halved_adjacency(int n) {
  if (n < 1) throw InvalidInput("halved_adjacency: n must be at least 1");
  if (n + 1 > 10) throw ResourceLimit("halved_adjacency: n + 1 must not exceed 10");
  const QuantumGraph cube = cube_like_graph(n + 1, CubePreset::hypercube);
  const Matrix& a = cube.adjacency;
  return 0.5 * (a * a - static_cast<double>(n + 1) * Matrix::identity(a.rows()));
}

Report halved_square_check(int n) {
  const Matrix b = halved_adjacency(n);
  const CliffordSet cl = clifford_set(n + 1);
  const QuantumSet& set = *cl.set;
  const double scale = scale_of({&b});
  const double thr = set.tol() * scale;
  Report rep;
  rep.add("schur-idempotent", max_abs_diff(schur_product(set, b, b), b), thr);
  rep.add("schur-self-adjoint", max_abs_diff(schur_star(set, b), b), thr);
  rep.add("undirected", max_abs_diff(b, b.adjoint()), thr);
  rep.add("no-loops", schur_product(set, b, Matrix::identity(set.N())).max_abs(), thr);
  double spec = 0.0;
  for (std::size_t mu = 0; mu < set.N(); ++mu) {
    spec = std::max(spec, std::abs(b(mu, mu) - cube_eigenvalue(n, CubePreset::squared, cl.degree(mu))));
  }
  rep.add("spectrum-closed-form", spec, thr);
  return rep;
}

}  // namespace qgraph
