#pragma once

#include <cstdint>

#include "witnesskit/densecore.hpp"

namespace witnesskit {

/// Orthogonal projector on C^d with integer rank Tr(P).
class OrthoProjector {
 public:
  static constexpr double kIdempotencyTol = 1e-10;
  static constexpr double kSpectrumTol = 1e-8;

  /// Validates idempotency and reads the rank off the spectrum: the trace
  /// rounded to an integer, with every eigenvalue within 1e-8 of {0, 1}.
  /// Throws NotProjector otherwise.
  explicit OrthoProjector(const HermitianOperator& m);

  std::size_t d() const noexcept { return matrix_.dim(); }
  std::size_t rank() const noexcept { return rank_; }
  /// Rank zero (the zero operator), as produced by complementing the identity.
  bool degenerate() const noexcept { return rank_ == 0; }
  const HermitianOperator& matrix() const noexcept { return matrix_; }

 private:
  HermitianOperator matrix_;
  std::size_t rank_ = 0;
};

/// sum_i |v_i><v_i|; throws NotOrthonormal unless <v_i|v_j> = delta_ij within 1e-10.
OrthoProjector from_orthonormal_vectors(std::span<const ComplexVector> vectors);

/// Projector onto the span of a seeded complex-Gaussian d x k matrix.
/// Throws InvalidRank unless 1 <= k <= d.
OrthoProjector random_projector(std::size_t d, std::size_t k, std::uint64_t seed);

/// 1 - P
OrthoProjector complement(const OrthoProjector& p);

/// |psi><psi| (x) sum_i |phi_i><phi_i| on C^d (x) C^d.
OrthoProjector product_projector(std::span<const Complex> psi, std::span<const ComplexVector> phis);

}  // namespace witnesskit
