#pragma once

// Linear maps on B(C^d) held as explicit d^2 x d^2 matrices.
//
// Vectorization is column stacking: vec(A)[j*d + i] = A(i, j), so vec(e_ij) is
// basis vector j*d + i. Under this convention the Hilbert-Schmidt adjoint of a
// map is the conjugate transpose of its matrix.

#include <string>

#include "witnesskit/densecore.hpp"

namespace witnesskit {

class SuperOperator {
 public:
  /// Wraps a user-supplied d^2 x d^2 representation.
  SuperOperator(std::size_t d, ComplexMatrix rep, std::string name = "custom");

  std::size_t d() const noexcept { return d_; }
  const ComplexMatrix& rep() const noexcept { return rep_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::size_t d_;
  ComplexMatrix rep_;
  std::string name_;
};

ComplexVector vec(const ComplexMatrix& a);
ComplexMatrix unvec(std::span<const Complex> v, std::size_t d);

SuperOperator identity_map(std::size_t d);
/// A -> Tr(A) 1 - A
SuperOperator reduction_map(std::size_t d);
/// A -> Tr(A)/(d-1) 1 - A, the compositional inverse of reduction_map.
SuperOperator inverse_reduction_map(std::size_t d);

/// Looks up a built-in map: "identity", "reduction", "inverse-reduction".
SuperOperator map_by_name(const std::string& name, std::size_t d);

ComplexMatrix apply(const SuperOperator& lam, const ComplexMatrix& a);

/// outer o inner, i.e. A -> outer(inner(A)).
SuperOperator compose(const SuperOperator& outer, const SuperOperator& inner);

SuperOperator adjoint_map(const SuperOperator& lam);

/// (1 (x) lam) W: applies `lam` to every d x d block W_ij of a d^2 x d^2
/// operator W = sum_ij e_ij (x) W_ij.
ComplexMatrix partial_apply(const SuperOperator& lam, const ComplexMatrix& w);

/// As partial_apply, re-wrapped as Hermitian. Throws NotHermitian when `lam`
/// does not preserve Hermiticity on `w`.
HermitianOperator partial_apply_hermitian(const SuperOperator& lam, const HermitianOperator& w);

/// P_d^+ = |psi+><psi+| with |psi+> = sum_i |ii> / sqrt(d).
HermitianOperator maximally_entangled_projector(std::size_t d);

/// (1 (x) lam) P_d^+
ComplexMatrix choi_matrix(const SuperOperator& lam);

}  // namespace witnesskit
