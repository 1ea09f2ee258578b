#pragma once

// Seeded random fixtures. Every draw flows from an explicit 64-bit seed.

#include <cstdint>
#include <random>

#include "qgeom/hilbert.hpp"

namespace qgeom {

using Rng = std::mt19937_64;

/// Haar-distributed state: normalized standard complex Gaussian vector.
State haar_state(Eigen::Index n, Rng& rng);

/// (G + G†)/2 with standard complex Gaussian entries.
Observable random_hermitian(Eigen::Index n, Rng& rng);

/// V·diag(e^{iλ})·V† from the spectral decomposition of a random Hermitian.
CMatrix random_unitary(Eigen::Index n, Rng& rng);

CVector gaussian_vector(Eigen::Index n, Rng& rng);

/// Deterministic per-stream seed derivation (splitmix64 of base + index).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace qgeom
