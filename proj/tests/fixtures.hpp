#pragma once

// Shared test data and independent oracles. Nothing here calls into the
// eigensolver or the map code under test.

#include <Eigen/Dense>

#include "witnesskit/densecore.hpp"

namespace witnesskit::testing {

// Choi-like witness on C^3 (x) C^3, transcribed entry by entry.
inline ComplexMatrix choi_witness() {
  ComplexMatrix w(9, 9);
  for (int i : {1, 2, 3, 5, 6, 7}) w(i, i) = 1.0;
  for (auto [r, c] : {std::pair{0, 4}, {0, 8}, {4, 0}, {4, 8}, {8, 0}, {8, 4}}) w(r, c) = -1.0;
  return w;
}

// Its transform under 1 (x) R^{-1}: ones on every (|ii>, |jj>) position.
inline ComplexMatrix choi_transformed() {
  ComplexMatrix w(9, 9);
  for (int r : {0, 4, 8})
    for (int c : {0, 4, 8}) w(r, c) = 1.0;
  return w;
}

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

/// Ascending spectrum from Eigen's self-adjoint solver.
inline std::vector<double> oracle_eigenvalues(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

inline double oracle_min_eigenvalue(const ComplexMatrix& m) { return oracle_eigenvalues(m).front(); }

}  // namespace witnesskit::testing
