#include "witnesskit/superops.hpp"

#include <cmath>

namespace witnesskit {

namespace {

void require_map_dim(std::size_t d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "map dimension must be >= 2");
}

// Matrix of A -> alpha Tr(A) 1 - A.
ComplexMatrix trace_minus_identity_rep(std::size_t d, double alpha) {
  const std::size_t n = d * d;
  ComplexMatrix rep = ComplexMatrix::identity(n) * Complex(-1.0);
  // vec(1) has ones at i*d + i; Tr(A) = sum_k vec(A)[k*d + k].
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) rep(i * d + i, k * d + k) += alpha;
  return rep;
}

}  // namespace

SuperOperator::SuperOperator(std::size_t d, ComplexMatrix rep, std::string name)
    : d_(d), rep_(std::move(rep)), name_(std::move(name)) {
  if (d_ == 0) throw Error(ErrorCode::InvalidArgument, "superoperator dimension must be positive");
  if (rep_.rows() != d_ * d_ || rep_.cols() != d_ * d_) {
    throw Error(ErrorCode::DimensionMismatch, "superoperator matrix must be d^2 x d^2");
  }
  if (!rep_.all_finite()) {
    throw Error(ErrorCode::InvalidArgument, "superoperator matrix has non-finite entries");
  }
}

ComplexVector vec(const ComplexMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "vec: matrix must be square");
  const std::size_t d = a.rows();
  ComplexVector v(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) v[j * d + i] = a(i, j);
  return v;
}

ComplexMatrix unvec(std::span<const Complex> v, std::size_t d) {
  if (v.size() != d * d) throw Error(ErrorCode::DimensionMismatch, "unvec: length is not d^2");
  ComplexMatrix a(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) a(i, j) = v[j * d + i];
  return a;
}

SuperOperator identity_map(std::size_t d) {
  return {d, ComplexMatrix::identity(d * d), "identity"};
}

SuperOperator reduction_map(std::size_t d) {
  require_map_dim(d);
  return {d, trace_minus_identity_rep(d, 1.0), "reduction"};
}

SuperOperator inverse_reduction_map(std::size_t d) {
  require_map_dim(d);
  return {d, trace_minus_identity_rep(d, 1.0 / static_cast<double>(d - 1)), "inverse-reduction"};
}

SuperOperator map_by_name(const std::string& name, std::size_t d) {
  if (name == "inverse-reduction") return inverse_reduction_map(d);
  if (name == "reduction") return reduction_map(d);
  if (name == "identity") return identity_map(d);
  throw Error(ErrorCode::InvalidArgument, "unknown map '" + name + "'");
}

ComplexMatrix apply(const SuperOperator& lam, const ComplexMatrix& a) {
  if (a.rows() != lam.d() || a.cols() != lam.d()) {
    throw Error(ErrorCode::DimensionMismatch,
                "apply: operand must be " + std::to_string(lam.d()) + "x" + std::to_string(lam.d()));
  }
  return unvec(lam.rep() * vec(a), lam.d());
}

SuperOperator compose(const SuperOperator& outer, const SuperOperator& inner) {
  if (outer.d() != inner.d()) throw Error(ErrorCode::DimensionMismatch, "compose: dimensions differ");
  return {outer.d(), outer.rep() * inner.rep(), outer.name() + "*" + inner.name()};
}

SuperOperator adjoint_map(const SuperOperator& lam) {
  return {lam.d(), lam.rep().adjoint(), lam.name() + "^dagger"};
}

ComplexMatrix partial_apply(const SuperOperator& lam, const ComplexMatrix& w) {
  const std::size_t d = lam.d();
  if (w.rows() != d * d || w.cols() != d * d) {
    throw Error(ErrorCode::DimensionMismatch,
                "partial_apply: operand must be " + std::to_string(d * d) + "x" +
                    std::to_string(d * d));
  }
  ComplexMatrix out(d * d, d * d);
  ComplexMatrix block(d, d);
  for (std::size_t bi = 0; bi < d; ++bi) {
    for (std::size_t bj = 0; bj < d; ++bj) {
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) block(k, l) = w(bi * d + k, bj * d + l);
      const ComplexMatrix mapped = apply(lam, block);
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) out(bi * d + k, bj * d + l) = mapped(k, l);
    }
  }
  return out;
}

HermitianOperator partial_apply_hermitian(const SuperOperator& lam, const HermitianOperator& w) {
  return HermitianOperator(partial_apply(lam, w.matrix()));
}

HermitianOperator maximally_entangled_projector(std::size_t d) {
  require_map_dim(d);
  ComplexMatrix p(d * d, d * d);
  const double v = 1.0 / static_cast<double>(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) p(i * d + i, j * d + j) = v;
  return HermitianOperator(p);
}

ComplexMatrix choi_matrix(const SuperOperator& lam) {
  return partial_apply(lam, maximally_entangled_projector(lam.d()).matrix());
}

}  // namespace witnesskit
