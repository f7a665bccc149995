#pragma once

// Finite abelian groups, characters, Cayley graphs and bicharacter twists.
//
// Group elements are residue tuples. Their index is mixed radix with the first
// component most significant, so in Z_n x Z_n the pair (a, b) sits at a*n + b.

#include <cstdint>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/quantum_set.hpp"

namespace qgraph {

using GroupElement = std::vector<int>;

class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<int> orders);

  const std::vector<int>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::size_t size() const { return size_; }

  GroupElement element(std::size_t idx) const;
  /// Components are reduced modulo the orders.
  std::size_t index(const GroupElement& g) const;
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t negate(std::size_t a) const;
  /// The i-th standard generator.
  std::size_t generator(std::size_t i) const;
  /// Number of nonzero components.
  int weight(std::size_t a) const;

  bool operator==(const AbelianGroup& o) const { return orders_ == o.orders_; }

 private:
  std::vector<int> orders_;
  std::size_t size_ = 1;
};

/// F(alpha, mu) = tau_mu(alpha), the product of omega_i^{alpha_i mu_i}.
Matrix fourier_matrix(const AbelianGroup& g);
/// Inverse: conj(F)^T / N.
Matrix inverse_fourier_matrix(const AbelianGroup& g);

class Bicharacter {
 public:
  const AbelianGroup& group() const { return group_; }
  /// gen_values(i, j) = sigma(e_i, e_j).
  const Matrix& gen_values() const { return gen_values_; }
  /// sigma(mu, nu) for element indices.
  cplx operator()(std::size_t mu, std::size_t nu) const;
  bool is_trivial() const;

 private:
  friend Bicharacter make_bicharacter(const AbelianGroup&, const Matrix&, double);
  Bicharacter(AbelianGroup g) : group_(std::move(g)) {}

  AbelianGroup group_;
  Matrix gen_values_;
  // sigma(e_i, e_j) = exp(2 pi i exponent_(i, j) / modulus_), exact.
  std::vector<std::int64_t> exponent_;
  std::int64_t modulus_ = 1;
};

/// Validates unimodularity and the order conditions sigma_ij^{n_i} = sigma_ij^{n_j} = 1.
Bicharacter make_bicharacter(const AbelianGroup& g, const Matrix& gen_values, double tol = kDefaultTol);
Bicharacter trivial_bicharacter(const AbelianGroup& g);

/// A(beta, alpha) = multiplicity of beta - alpha in s.
Matrix cayley_adjacency(const AbelianGroup& g, const std::vector<std::size_t>& s);
/// Cayley graph on the classical set with |G| points.
QuantumGraph classical_cayley(const AbelianGroup& g, const std::vector<std::size_t>& s,
                              double tol = kDefaultTol);
/// lambda_mu = sum over theta in s of tau_mu(-theta).
std::vector<cplx> cayley_spectrum(const AbelianGroup& g, const std::vector<std::size_t>& s);

/// Twisted group algebra in the basis b_mu = tau_mu / sqrt(N).
SetPtr twist_quantum_set(const Bicharacter& sigma, double tol = kDefaultTol);

/// Diagonal adjacency lambda_mu over the twisted set.
QuantumGraph twisted_cayley(const AbelianGroup& g, const std::vector<std::size_t>& s,
                            const Bicharacter& sigma, double tol = kDefaultTol);

/// Tensor with `upper` output legs and `lower` input legs, each indexed by the
/// group, stored as an N^upper x N^lower matrix.
struct GradedTensor {
  std::size_t upper = 0;
  std::size_t lower = 0;
  Matrix data;
};

/// Multiplies entry (i, j) by sigma_i conj(sigma_j), where sigma_i is the
/// product of sigma(i_a, i_b) over a < b.
GradedTensor twist_tensor(const GradedTensor& t, const Bicharacter& sigma);
GradedTensor compose(const GradedTensor& s, const GradedTensor& t);
GradedTensor tensor(const GradedTensor& s, const GradedTensor& t);

/// Classical structure tensors in the character basis.
GradedTensor fourier_multiplication(const AbelianGroup& g);
GradedTensor fourier_unit(const AbelianGroup& g);

}  // namespace qgraph
