#include "qgraph/constructions.hpp"

#include <algorithm>
#include <sstream>

#include "qgraph/errors.hpp"

namespace qgraph {

bool edge_subgraph(const QuantumGraph& g, const QuantumGraph& h) {
  if (!same_set(g.set, h.set)) throw InvalidInput("edge_subgraph: graphs live on different sets");
  const QuantumSet& set = *g.set;
  const Matrix hg = schur_product(set, h.adjacency, g.adjacency);
  const Matrix gh = schur_product(set, g.adjacency, h.adjacency);
  const double thr = set.tol() * scale_of({&g.adjacency, &h.adjacency});
  return max_abs_diff(hg, h.adjacency) <= thr && max_abs_diff(gh, h.adjacency) <= thr;
}

BlockMap block_surjection(const SetPtr& set, const std::vector<std::size_t>& keep) {
  if (!set->has_blocks()) throw InvalidInput("induced_subgraph: needs a set given by matrix blocks");
  if (keep.empty()) throw InvalidInput("induced_subgraph: keep at least one block");
  std::vector<std::size_t> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("induced_subgraph: repeated block index");
  }
  std::vector<int> blocks;
  for (std::size_t b : sorted) {
    if (b >= set->blocks().size()) {
      std::ostringstream os;
      os << "induced_subgraph: block " << b << " does not exist (set has " << set->blocks().size() << ")";
      throw InvalidInput(os.str());
    }
    blocks.push_back(set->blocks()[b]);
  }
  const SetPtr target = build_quantum_set(blocks, set->tol());
  Matrix q(target->N(), set->N());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const auto n = static_cast<std::size_t>(blocks[k]);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) q(target->index(k, a, b), set->index(sorted[k], a, b)) = 1.0;
  }
  return {{set, target, q}, BlockMapKind::quotient_surjection};
}

QuantumGraph induced_subgraph(const QuantumGraph& g, const std::vector<std::size_t>& keep) {
  const BlockMap q = block_surjection(g.set, keep);
  return {q.map.codomain, q.map.matrix * g.adjacency * q.map.matrix.adjoint(), g.weighted};
}

QuantumGraph quotient_graph(const QuantumGraph& g, const BlockMap& iota) {
  if (!same_set(iota.map.codomain, g.set)) {
    throw InvalidInput("quotient_graph: embedding must map into the graph's set");
  }
  const Report hom = check_star_homomorphism(iota.map, true);
  if (!hom.passed()) {
    std::ostringstream os;
    os << "quotient_graph: map is not a unital star homomorphism (";
    for (const auto& c : hom.checks)
      if (!c.passed) os << c.name << " residual " << c.residual << " ";
    os << ")";
    throw InvalidInput(os.str());
  }
  const Matrix& i = iota.map.matrix;
  return {iota.map.domain, i.adjoint() * g.adjacency * i, true};
}

BlockMap diagonal_embedding(int n) {
  if (n < 1) throw InvalidInput("diagonal_embedding: n must be positive");
  const SetPtr small = build_quantum_set(std::vector<int>(static_cast<std::size_t>(n), 1));
  const SetPtr big = build_quantum_set({n});
  Matrix iota(big->N(), small->N());
  const double s = std::sqrt(static_cast<double>(n));
  for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) iota(big->index(0, k, k), k) = s;
  return {{small, big, iota}, BlockMapKind::subalgebra_embedding};
}

Operator conjugation_map(const Matrix& u) {
  if (!u.is_square()) throw InvalidInput("conjugation_map: U must be square");
  const double dev = max_abs_diff(u.adjoint() * u, Matrix::identity(u.rows()));
  if (dev > 1e-9) throw InvalidInput("conjugation_map: U is not unitary");
  const SetPtr set = build_quantum_set({static_cast<int>(u.rows())});
  return {set, set, kron(u, u.conj())};
}

Report isomorphism_report(const Operator& phi, const QuantumGraph& g1, const QuantumGraph& g2) {
  if (!same_set(phi.domain, g1.set) || !same_set(phi.codomain, g2.set)) {
    throw InvalidInput("check_isomorphism: map does not go between the graphs' sets");
  }
  Report rep = check_star_homomorphism(phi, true);
  const std::size_t n = phi.matrix.cols();
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < n; ++c) cols.push_back(phi.matrix.column(c));
  const bool square = phi.matrix.rows() == n;
  const std::size_t rank = numerical_rank(cols, phi.domain->tol());
  rep.add_flag("invertible", square && rank == n);
  const Matrix lhs = phi.matrix * g1.adjacency;
  const Matrix rhs = g2.adjacency * phi.matrix;
  rep.add("intertwines-adjacency", max_abs_diff(lhs, rhs), phi.domain->tol() * scale_of({&lhs, &rhs}));
  return rep;
}

bool check_isomorphism(const Operator& phi, const QuantumGraph& g1, const QuantumGraph& g2) {
  return isomorphism_report(phi, g1, g2).passed();
}

}  // namespace qgraph
