#pragma once

// Seeded samplers. The generator is always caller-owned.

#include <cstdint>
#include <random>

#include "witnesskit/densecore.hpp"

namespace witnesskit {

using Rng = std::mt19937_64;

/// Generator for stream `index` of a run seeded with `seed`; streams with
/// different indices are decorrelated.
Rng make_rng(std::uint64_t seed, std::uint64_t index = 0);

/// Standard complex Gaussian entries (real and imaginary parts N(0, 1/2)).
ComplexVector random_gaussian_vector(std::size_t d, Rng& rng);

/// Uniform on the unit sphere of C^d.
ComplexVector random_unit_vector(std::size_t d, Rng& rng);

/// (G + G^dagger)/2 for a complex Gaussian matrix G.
HermitianOperator random_hermitian(std::size_t d, Rng& rng);

}  // namespace witnesskit
