#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "witnesskit/densecore.hpp"
#include "witnesskit/superops.hpp"

namespace witnesskit {

/// Outcome of certifying W through a map L with (1 (x) L) W >= 0.
///
/// `certified == false` is inconclusive: it never shows that W fails to be a
/// witness.
struct WitnessVerdict {
  bool hermitian = false;
  double min_eigenvalue = 0.0;
  ComplexVector negative_witness_vector;
  double transformed_min_eigenvalue = 0.0;
  bool transformed_hermitian = false;
  bool certified = false;
  std::string map_name;
  std::string reason;
};

struct ProductState {
  ComplexVector psi;
  ComplexVector phi;

  /// Throws NotNormalized unless both factors are unit vectors within 1e-10.
  void validate() const;
  ComplexVector vector() const { return kron(psi, phi); }
};

WitnessVerdict certify_via_map(const HermitianOperator& w, const SuperOperator& lam,
                               double tol = kDefaultPsdTol);
/// Accepts a raw matrix; a non-Hermitian input yields hermitian = false.
WitnessVerdict certify_via_map(const ComplexMatrix& w, const SuperOperator& lam,
                               double tol = kDefaultPsdTol);

/// <psi (x) phi| W |psi (x) phi>
double product_expectation(const HermitianOperator& w, const ProductState& s);
double product_expectation(const ComplexMatrix& w, const ProductState& s);

struct SeesawOptions {
  int restarts = 30;
  int iters = 50;
  std::uint64_t seed = 1;
  double stop_tol = 1e-12;
};

struct BlockPosResult {
  double value = 0.0;
  ProductState state;
  int restart = 0;  // restart index that achieved `value`
};

/// Alternating exact minimization of <psi (x) phi|W|psi (x) phi> from the
/// starting factor `psi0`. Returns the objective after every half-step; the
/// sequence is non-increasing up to rounding. `state` receives the final pair.
std::vector<double> seesaw_descent(const HermitianOperator& w, ComplexVector psi0, int iters,
                                   double stop_tol, ProductState* state = nullptr);

/// Best seesaw value over all restarts: an upper bound on the minimum of W
/// over product states. Restart r starts from a unit vector drawn from
/// make_rng(seed, r); ties go to the lowest restart index.
BlockPosResult blockpos_min(const HermitianOperator& w, const SeesawOptions& options = {});

struct Detection {
  bool detected = false;
  double value = 0.0;  // Tr(W rho)
};

/// Throws NotAState unless rho is PSD within `tol` and has unit trace within 1e-9.
Detection detect(const HermitianOperator& w, const HermitianOperator& rho,
                 double tol = kDefaultPsdTol);

}  // namespace witnesskit
