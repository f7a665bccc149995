#pragma once

#include <cstdint>
#include <random>

#include "qgraph/linalg.hpp"

namespace qgraph {

using Rng = std::mt19937_64;

/// Entries with independent standard normal real and imaginary parts.
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);
Vector random_vector(Rng& rng, std::size_t n);
Matrix random_hermitian(Rng& rng, std::size_t n);
/// Haar-like unitary from Gram-Schmidt on a Gaussian matrix.
Matrix random_unitary(Rng& rng, std::size_t n);
/// Random unitary with determinant fixed to 1.
Matrix random_special_unitary(Rng& rng, std::size_t n);

}  // namespace qgraph
