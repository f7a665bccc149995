#pragma once

// Z_n x Z_n with the Weyl bicharacter, its isomorphism with M_n and the
// quantum rook's graph.

#include "qgraph/abelian.hpp"

namespace qgraph {

/// sigma(a e1 + b e2, c e1 + d e2) = omega^{bc}.
Bicharacter weyl_bicharacter(int n);

struct WeylData {
  int n = 0;
  cplx omega;
  AbelianGroup group{{1}};
  SetPtr twisted;  // twist of C(Z_n x Z_n)
  SetPtr matrix;   // M_n
  Operator phi;      // twisted -> M_n
  Operator phi_inv;  // M_n -> twisted
};

/// phi(tau_1) = diag(omega^i), phi(tau_2) = cyclic shift e_{j+1, j}; isometric
/// between the orthonormal bases.
WeylData phi_isomorphism(int n);

/// {a e1} for a = 1..n-1 followed by {b e2} for b = 1..n-1.
std::vector<std::size_t> rook_generators(int n);

/// A[(i,j),(k,l)] = [i-j = k-l mod n] + n [i=j=k=l] - 2 [i=k][j=l].
Matrix rook_closed_form(int n);
/// Closed form on M_n.
QuantumGraph quantum_rook(int n);
/// phi * (twisted Cayley adjacency) * phi^{-1}.
Matrix rook_via_twist(const WeylData& w);

/// (phi (x) phi) applied to the twisted duality tensor, as an N x N matrix.
Matrix transported_duality(const WeylData& w);
/// phi m (phi^{-1} (x) phi^{-1}) as an N x N^2 matrix.
Matrix transported_multiplication(const WeylData& w);
/// delta_{jk} delta_{il} as an N x N matrix.
Matrix duality_closed_form(int n);
/// delta_{ri} delta_{kj} delta_{sl} / sqrt(n) as an N x N^2 matrix.
Matrix multiplication_closed_form(int n);

}  // namespace qgraph
