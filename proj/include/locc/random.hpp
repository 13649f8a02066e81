// Seeded random generators for matrices, unitaries and permutations.
// Every randomized routine in the library derives its streams from an
// explicit seed so concurrent runs stay reproducible.
#pragma once

#include "locc/matrix.hpp"

#include <cstdint>
#include <random>

namespace locc {

using Rng = std::mt19937_64;

/// Mixes a salt into a base seed (splitmix64 finalizer).
std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t salt);

/// Standard complex Gaussian scalar (real and imaginary parts N(0, 1/2)).
Complex complex_gaussian(Rng& rng);

ComplexMatrix gaussian_matrix(Index rows, Index cols, Rng& rng);
StateVector gaussian_vector(Index d, Rng& rng);

/// Haar-distributed d x d unitary (QR of a Gaussian with phase fix).
ComplexMatrix haar_unitary(Index d, Rng& rng);

/// Random d x r co-isometry, r >= d: polar factor of a Gaussian.
ComplexMatrix haar_coisometry(Index d, Index r, Rng& rng);

/// Permutation matrix of a uniformly random single d-cycle.
ComplexMatrix random_cycle_permutation(Index d, Rng& rng);

/// Random diagonal unitary.
ComplexMatrix random_diagonal_unitary(Index d, Rng& rng);

}  // namespace locc
