#pragma once

// Named quantum graphs on M_2 and M_3.

#include "qgraph/graph.hpp"
#include "qgraph/random.hpp"

namespace qgraph {

struct PauliBasis {
  Matrix sigma1;
  Matrix sigma2;
  Matrix sigma3;
  Matrix identity;
  Matrix lambda8;  // diag(1, 1, -2) / sqrt(2), so Tr(lambda8^dagger lambda8) = 3
};

const PauliBasis& pauli();

/// sigma3 sin t + identity cos t.
Matrix rotated_sigma3(double t);

/// Quantum edge on M_2 spanned by Pauli matrix k = 1, 2, 3.
QuantumGraph pauli_edge(int k);

/// Canonical simple graph on M_2 with m quantum edges: 0, P1, P1 + P2, J - I.
QuantumGraph m2_graph(int m);

/// P3(t) [+ P2] [+ P1] for m = 1, 2, 3 and t in [0, pi/2].
QuantumGraph m2_partial_family(int m, double t);

/// Number of quantum edges of a simple graph on M_2.
int classify_m2(const QuantumGraph& g);

/// P1 + P3 on M_2.
QuantumGraph anticommutative_square();

/// The single quantum edge lambda8 on M_3.
QuantumGraph gell_mann_graph();

/// Random subspace of dimension dim inside the traceless self-adjoint 2x2
/// matrices, returned as a complex basis.
std::vector<Matrix> random_su2_subspace(Rng& rng, int dim);

}  // namespace qgraph
