#pragma once

// Shift-structured generalization of the Choi witness on C^d (x) C^d.
//
// With S|i> = |i+1 mod d>, the PSD seed operator W~ = sum_ij e_ij (x) W~_ij has
//   W~_ii = S^i diag(a) S^i^dagger,   W~_ij = x |i><j|  (i != j),
// (0-based i, j) and the witness candidate is W = (1 (x) R) W~ with R the
// reduction map.

#include <vector>

#include "witnesskit/densecore.hpp"

namespace witnesskit {

struct ChoiFamilyParams {
  std::size_t d = 0;
  std::vector<double> a;
  double x = 0.0;

  /// Throws InvalidParams naming the violated constraint.
  void validate() const;
};

struct FeasibilityReport {
  /// x in [-a_1/(d-1), a_1]: the PSD condition on the |ii> submatrix.
  bool psd_interval_ok = false;
  /// y_k = sum(a)/(d-1) - a_k
  std::vector<double> y;
  bool y_nonneg = false;
  /// x in [-y_1, y_1/(d-1)]
  bool y_interval_ok = false;
  /// Eigenvalue check W~ >= -1e-9; this is the authoritative feasibility flag.
  bool eigen_confirmed = false;
};

ComplexMatrix shift_operator(std::size_t d);

HermitianOperator build_wtilde(const ChoiFamilyParams& params);

FeasibilityReport feasibility_report(const ChoiFamilyParams& params);

HermitianOperator build_witness(const ChoiFamilyParams& params);

}  // namespace witnesskit
