#pragma once

// Small dense complex linear algebra used throughout the library.
//
// Matrices are row-major; entry (r, c) is the coefficient of basis vector r
// in the image of basis vector c. Nothing here depends on an external
// numerical library, and every routine is deterministic for a fixed input.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qgraph {

using cplx = std::complex<double>;
using Vector = std::vector<cplx>;

inline constexpr cplx kI{0.0, 1.0};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> data);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const cplx> diag);
  /// Builds a matrix from nested rows; all rows must have equal length.
  static Matrix from_rows(const std::vector<std::vector<cplx>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<cplx> data() { return data_; }
  std::span<const cplx> data() const { return data_; }

  Matrix adjoint() const;
  Matrix transpose() const;
  Matrix conj() const;

  Vector column(std::size_t c) const;
  Vector diag() const;

  double max_abs() const;
  cplx trace() const;
  /// True when every off-diagonal entry is exactly zero.
  bool is_diagonal() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(cplx s);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(cplx s, Matrix a);
Vector operator*(const Matrix& a, std::span<const cplx> v);

Matrix kron(const Matrix& a, const Matrix& b);
double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b);
double max_abs(std::span<const cplx> v);

/// Hilbert-Schmidt inner product Tr(a^dagger b).
cplx hs_inner(const Matrix& a, const Matrix& b);
cplx dot(std::span<const cplx> a, std::span<const cplx> b);  // conjugate-linear in a
double norm2(std::span<const cplx> v);

/// max(1, largest entry magnitude) over the given matrices.
double scale_of(std::initializer_list<const Matrix*> ms);

struct EigenSystem {
  std::vector<double> values;  // ascending
  Matrix vectors;              // orthonormal columns, same order as values
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
/// Throws InvalidInput when ||h - h^dagger||_inf exceeds tol * scale.
EigenSystem hermitian_eigs(const Matrix& h, double tol = 1e-9);

/// Numerical rank of a list of vectors (modified Gram-Schmidt, relative threshold).
std::size_t numerical_rank(const std::vector<Vector>& vs, double rel_tol);

/// Orthonormalizes vectors in order; returns the indices that were kept.
std::vector<std::size_t> gram_schmidt(std::vector<Vector>& vs, double abs_tol);

/// Unit-modulus exp(2 pi i k / n) with exact values on the quarter turns.
cplx root_of_unity(long long k, long long n);

}  // namespace qgraph
