#include "witnesskit/projectors.hpp"

#include <cmath>
#include <string>

#include "witnesskit/random.hpp"

namespace witnesskit {

namespace {

constexpr double kOrthoTol = 1e-10;

void require_orthonormal(std::span<const ComplexVector> vectors) {
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != vectors.front().size()) {
      throw Error(ErrorCode::DimensionMismatch, "vectors differ in length");
    }
    for (std::size_t j = i; j < vectors.size(); ++j) {
      const Complex expected = (i == j) ? 1.0 : 0.0;
      if (std::abs(inner(vectors[i], vectors[j]) - expected) > kOrthoTol) {
        throw Error(ErrorCode::NotOrthonormal, "vectors " + std::to_string(i) + " and " +
                                                   std::to_string(j) + " are not orthonormal");
      }
    }
  }
}

}  // namespace

OrthoProjector::OrthoProjector(const HermitianOperator& m) : matrix_(m) {
  const ComplexMatrix& p = m.matrix();
  if (distance(p * p, p) > kIdempotencyTol) {
    throw Error(ErrorCode::NotProjector, "operator is not idempotent");
  }
  const double tr = m.trace();
  const double rounded = std::round(tr);
  for (double ev : hermitian_eigen(m).eigenvalues) {
    if (std::abs(ev) > kSpectrumTol && std::abs(ev - 1.0) > kSpectrumTol) {
      throw Error(ErrorCode::NotProjector, "eigenvalue " + std::to_string(ev) + " not in {0, 1}");
    }
  }
  if (std::abs(tr - rounded) > kSpectrumTol || rounded < 0.0) {
    throw Error(ErrorCode::NotProjector, "trace is not an integer");
  }
  rank_ = static_cast<std::size_t>(rounded);
}

OrthoProjector from_orthonormal_vectors(std::span<const ComplexVector> vectors) {
  if (vectors.empty()) throw Error(ErrorCode::InvalidRank, "need at least one vector");
  require_orthonormal(vectors);
  const std::size_t d = vectors.front().size();
  ComplexMatrix p(d, d);
  for (const auto& v : vectors) p += ComplexMatrix::outer(v, v);
  return OrthoProjector(HermitianOperator(p));
}

OrthoProjector random_projector(std::size_t d, std::size_t k, std::uint64_t seed) {
  if (k < 1 || k > d) {
    throw Error(ErrorCode::InvalidRank,
                "rank " + std::to_string(k) + " outside [1, " + std::to_string(d) + "]");
  }
  Rng rng = make_rng(seed);
  std::vector<ComplexVector> columns;
  columns.reserve(k);
  for (std::size_t i = 0; i < k; ++i) columns.push_back(random_gaussian_vector(d, rng));
  return from_orthonormal_vectors(orthonormalize(columns));
}

OrthoProjector complement(const OrthoProjector& p) {
  return OrthoProjector(
      HermitianOperator(ComplexMatrix::identity(p.d()) - p.matrix().matrix()));
}

OrthoProjector product_projector(std::span<const Complex> psi, std::span<const ComplexVector> phis) {
  if (std::abs(norm(psi) - 1.0) > kOrthoTol) {
    throw Error(ErrorCode::NotNormalized, "psi is not a unit vector");
  }
  if (phis.empty()) throw Error(ErrorCode::InvalidRank, "need at least one phi");
  require_orthonormal(phis);
  if (phis.front().size() != psi.size()) {
    throw Error(ErrorCode::DimensionMismatch, "psi and phi dimensions differ");
  }
  std::vector<ComplexVector> omegas;
  omegas.reserve(phis.size());
  for (const auto& phi : phis) omegas.push_back(kron(psi, phi));
  return from_orthonormal_vectors(omegas);
}

}  // namespace witnesskit
