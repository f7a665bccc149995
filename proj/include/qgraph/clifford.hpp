#pragma once

// Z_2^n with the sign bicharacter: Clifford algebras and the anticommutative
// hypercube family.

#include <string>

#include "qgraph/abelian.hpp"

namespace qgraph {

/// sigma(e_i, e_j) = -1 for i > j, +1 otherwise.
Bicharacter clifford_bicharacter(int n);

struct CliffordSet {
  int n = 0;
  AbelianGroup group{{2}};
  SetPtr set;

  /// Number of ones in the element with index mu.
  int degree(std::size_t mu) const { return group.weight(mu); }
};

CliffordSet clifford_set(int n, double tol = kDefaultTol);

enum class CubePreset { hypercube, folded, squared };

CubePreset parse_cube_preset(const std::string& name);
std::vector<std::size_t> cube_generators(int n, CubePreset preset);

/// Closed-form eigenvalue for an element of degree d.
double cube_eigenvalue(int n, CubePreset preset, int d);

QuantumGraph cube_like_graph(int n, CubePreset preset, double tol = kDefaultTol);
QuantumGraph cube_like_graph(int n, const std::vector<std::size_t>& s, double tol = kDefaultTol);

/// tau_mu -> tau_mu on even degree, i tau_mu tau_{n+1} on odd degree,
/// as a map Cl_n -> Cl_{n+1}.
Operator folded_embedding(int n);

/// Checks of the folded embedding: star homomorphism, unitality, and
/// iota^dagger A_{Q_{n+1}} iota = 2 A_{folded}, plus edge conservation.
Report folded_embedding_report(int n);

/// B = (A^2 - (n+1) I) / 2 for the anticommutative hypercube on Cl_{n+1}.
Matrix halved_adjacency(int n);
/// Simple-graph battery for B and its spectrum against the closed form.
Report halved_square_check(int n);

}  // namespace qgraph
