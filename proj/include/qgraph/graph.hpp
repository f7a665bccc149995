#pragma once

// Quantum graphs over a quantum set: Schur calculus on adjacency operators,
// rotation to and from edge projections, the predicate battery and the
// operator-space description on matrix blocks.

#include <optional>
#include <string>
#include <vector>

#include "qgraph/quantum_set.hpp"

namespace qgraph {

struct QuantumGraph {
  SetPtr set;
  Matrix adjacency;
  bool weighted = false;
};

/// Realigned adjacency, one (n_i n_j) x (n_i n_j) matrix per ordered block pair.
struct EdgeProjection {
  SetPtr set;
  std::vector<Matrix> blocks;  // pair (i, j) stored at i * blocks.size() + j

  const Matrix& at(std::size_t i, std::size_t j) const;
  Matrix& at(std::size_t i, std::size_t j);
};

enum class LoopStatus { none, all, partial, mixed_weighted };

std::string to_string(LoopStatus s);

struct GraphReport {
  bool is_graph = false;
  bool is_undirected = false;
  LoopStatus loop_status = LoopStatus::none;
  bool is_simple = false;
  bool is_multigraph = false;
  long long vertices = 0;
  cplx edges;
  bool edges_imaginary = false;        // Im(edges) exceeded the tolerance
  std::optional<long long> quantum_edges;  // unset when the set has no block structure
  std::optional<double> regular_degree;
};

/// Largest generic Schur product workload accepted before ResourceLimit.
inline constexpr double kSchurWorkLimit = 3.0e8;

Matrix schur_product(const QuantumSet& set, const Matrix& a, const Matrix& b);
/// Sparse evaluation without the diagonal shortcut.
Matrix schur_product_generic(const QuantumSet& set, const Matrix& a, const Matrix& b);
Matrix schur_star(const QuantumSet& set, const Matrix& a);
Operator schur_product(const Operator& a, const Operator& b);
Operator schur_star(const Operator& a);
/// Schur unit J = eta eta^dagger.
Matrix schur_unit(const QuantumSet& set);

EdgeProjection adjacency_to_projection(const SetPtr& set, const Matrix& a);
Matrix projection_to_adjacency(const EdgeProjection& p);
/// Linear leg exchange; an undirected graph's projection is fixed by it.
EdgeProjection swap_legs(const EdgeProjection& p);

/// Eigenvalues of the edge projection as an element of C(X) (x) C(X)^op.
/// Block sets return the full spectrum of all realigned blocks; other sets
/// return the distinct eigenvalues found by a Lanczos run in the Schur algebra.
/// Requires the Schur self-adjointness of a.
std::vector<double> edge_spectrum(const SetPtr& set, const Matrix& a);

/// Positivity of the edge projection as an element.
bool edge_projection_positive(const SetPtr& set, const Matrix& a, double tol);

GraphReport graph_report(const QuantumGraph& g);

/// Single quantum edge on M_n spanned by xi.
QuantumGraph quantum_edge(int n, const Matrix& xi, double tol = kDefaultTol);

/// Graph A_V on M_n for the span of the given matrices.
QuantumGraph graph_from_subspace(int n, const std::vector<Matrix>& basis, double tol = kDefaultTol);

/// Orthonormal bases of the operator spaces V_ij, indexed by block pair as in
/// EdgeProjection. Each matrix is n_i x n_j with Tr(xi^dagger xi) = sqrt(n_i n_j).
std::vector<std::vector<Matrix>> subspace_from_graph(const QuantumGraph& g);

/// Real-independent self-adjoint matrices with the same span as v.
std::vector<Matrix> selfadjoint_basis(const std::vector<Matrix>& v, double tol = kDefaultTol);

/// Places per-pair bases into operators on C^{n_1 + ... + n_a}.
std::vector<Matrix> embed_operator_space(const QuantumSet& set,
                                         const std::vector<std::vector<Matrix>>& pairs);

/// Closure of span(v) under multiplication by the block projections on both sides.
bool check_bimodule(const std::vector<Matrix>& v, const QuantumSet& set, double tol = kDefaultTol);

}  // namespace qgraph
