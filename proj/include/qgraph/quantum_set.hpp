#pragma once

// Finite quantum sets as special symmetric Frobenius algebras.
//
// A set is stored through its structure tensors in a fixed orthonormal basis:
// for a direct sum of matrix blocks the basis is e_ab / sqrt(n_i), block by
// block and row-major inside each block. Twisted group algebras use a basis
// indexed by group elements instead and carry no block list.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "qgraph/linalg.hpp"
#include "qgraph/report.hpp"

namespace qgraph {

inline constexpr double kDefaultTol = 1e-9;

/// One structure constant m^p_{rs}: basis r times basis s has coefficient
/// `value` on basis p.
struct MultEntry {
  std::size_t p = 0;
  std::size_t r = 0;
  std::size_t s = 0;
  cplx value;
};

struct BasisLabel {
  std::size_t block = 0;
  std::size_t row = 0;
  std::size_t col = 0;
};

/// Group data remembered by twisted sets so they can be serialized.
struct TwistOrigin {
  std::vector<int> orders;
  Matrix gen_values;
};

class QuantumSet;
using SetPtr = std::shared_ptr<const QuantumSet>;

class QuantumSet {
 public:
  /// Direct sum of full matrix algebras M_{n_1} + ... + M_{n_a}.
  static SetPtr from_blocks(const std::vector<int>& blocks, double tol = kDefaultTol);

  /// Arbitrary structure tensors. No axiom is checked here; run
  /// verify_frobenius on the result.
  static SetPtr from_tensors(std::size_t n, std::vector<MultEntry> mult, Vector unit,
                             Matrix star, double tol = kDefaultTol,
                             std::vector<int> blocks = {},
                             std::optional<TwistOrigin> twist = std::nullopt);

  std::size_t N() const { return n_; }
  double tol() const { return tol_; }
  const std::vector<int>& blocks() const { return blocks_; }
  bool has_blocks() const { return !blocks_.empty(); }
  bool is_commutative_blocks() const;
  const std::optional<TwistOrigin>& twist() const { return twist_; }

  /// Entries sorted by (p, r, s).
  const std::vector<MultEntry>& mult() const { return by_output_; }
  /// All entries with output index p.
  std::span<const MultEntry> products_into(std::size_t p) const;
  /// All entries with inputs (r, s).
  std::span<const MultEntry> products_of(std::size_t r, std::size_t s) const;
  /// True when every input pair (r, s) feeds at most one output.
  bool monomial() const { return monomial_; }

  const Vector& unit() const { return unit_; }
  const Matrix& star() const { return star_; }
  /// Duality tensor computed as m^dagger applied to the unit; R(p, q) = R^{pq}.
  const Matrix& duality() const { return duality_; }

  struct Entry {
    std::size_t row;
    std::size_t col;
    cplx value;
  };
  /// Nonzero entries of the duality tensor in row-major order.
  const std::vector<Entry>& duality_entries() const { return duality_nz_; }

  /// Basis slot of matrix unit (row, col) in block `block`.
  std::size_t index(std::size_t block, std::size_t row, std::size_t col) const;
  BasisLabel label(std::size_t p) const;
  std::size_t block_offset(std::size_t block) const;

  /// Structural equality (same blocks or same twist data, same size).
  bool same_as(const QuantumSet& other) const;

 private:
  QuantumSet() = default;
  void finalize();

  std::size_t n_ = 0;
  double tol_ = kDefaultTol;
  std::vector<int> blocks_;
  std::vector<std::size_t> offsets_;
  std::optional<TwistOrigin> twist_;
  std::vector<MultEntry> by_output_;
  std::vector<std::size_t> output_start_;
  std::vector<MultEntry> by_input_;
  bool monomial_ = true;
  Vector unit_;
  Matrix star_;
  Matrix duality_;
  std::vector<Entry> duality_nz_;
};

bool same_set(const SetPtr& a, const SetPtr& b);

SetPtr build_quantum_set(const std::vector<int>& blocks, double tol = kDefaultTol);

struct AlgebraElement {
  SetPtr set;
  Vector coeffs;
};

/// Linear map l2(domain) -> l2(codomain); matrix(r, c) is the coefficient of
/// codomain basis r in the image of domain basis c.
struct Operator {
  SetPtr domain;
  SetPtr codomain;
  Matrix matrix;
};

AlgebraElement unit_element(const SetPtr& set);
AlgebraElement basis_element(const SetPtr& set, std::size_t p);
/// Element given blockwise as ordinary matrices (one per block).
AlgebraElement element_from_blocks(const SetPtr& set, const std::vector<Matrix>& blocks);
std::vector<Matrix> element_to_blocks(const AlgebraElement& x);

AlgebraElement algebra_multiply(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement algebra_star(const AlgebraElement& x);
cplx counit_apply(const AlgebraElement& x);

/// Coefficient-level forms used by the rest of the library.
Vector multiply_coeffs(const QuantumSet& set, std::span<const cplx> x, std::span<const cplx> y);
Vector star_coeffs(const QuantumSet& set, std::span<const cplx> x);

/// Left-regular representation: matrix of y -> x y. Faithful, and x* maps to
/// the adjoint matrix.
Matrix left_regular(const QuantumSet& set, std::span<const cplx> x);

/// Axiom battery: special, Frobenius law, snakes, duality/multiplication
/// identities, unit laws, duality symmetry, star involution, associativity,
/// and the vertex count.
Report verify_frobenius(const QuantumSet& set);

/// Multiplicativity, optional unitality and star preservation of f.
Report check_star_homomorphism(const Operator& f, bool unital);

/// Hermitian within tol and no eigenvalue below -tol * scale.
bool is_positive_element(const Matrix& rep, double tol = kDefaultTol);

/// Adjoint of a map between quantum sets with respect to both l2 inner products.
Operator adjoint(const Operator& f);
Operator compose(const Operator& g, const Operator& f);
Operator identity_operator(const SetPtr& set);

}  // namespace qgraph
