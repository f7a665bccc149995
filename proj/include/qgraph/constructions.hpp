#pragma once

// Subgraphs, quotients and isomorphism verification.

#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

enum class BlockMapKind { quotient_surjection, subalgebra_embedding, iso };

struct BlockMap {
  Operator map;
  BlockMapKind kind = BlockMapKind::subalgebra_embedding;
};

/// True when H is an edge subgraph of G: A_H . A_G = A_H = A_G . A_H.
bool edge_subgraph(const QuantumGraph& g, const QuantumGraph& h);

/// Coordinate projection q from l2(X) onto the kept blocks.
BlockMap block_surjection(const SetPtr& set, const std::vector<std::size_t>& keep);

/// A_Y = q A_X q^dagger on the kept blocks.
QuantumGraph induced_subgraph(const QuantumGraph& g, const std::vector<std::size_t>& keep);

/// Weighted graph A_Y = iota^dagger A_X iota; iota must be a unital star embedding C(Y) -> C(X).
QuantumGraph quotient_graph(const QuantumGraph& g, const BlockMap& iota);

/// Diagonal inclusion of C(X_n) into M_n.
BlockMap diagonal_embedding(int n);

/// x -> U x U^dagger on M_n.
Operator conjugation_map(const Matrix& u);

/// phi is a star homomorphism, invertible, and phi A_1 = A_2 phi.
bool check_isomorphism(const Operator& phi, const QuantumGraph& g1, const QuantumGraph& g2);
/// Per-check detail behind check_isomorphism.
Report isomorphism_report(const Operator& phi, const QuantumGraph& g1, const QuantumGraph& g2);

}  // namespace qgraph
