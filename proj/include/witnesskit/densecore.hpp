#pragma once

// Dense complex linear algebra for the small operators used throughout the
// library: operators on C^d and C^d (x) C^d with d up to a few dozen.
// Storage is row-major; there is no sparse path.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "witnesskit/error.hpp"

namespace witnesskit {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Default tolerance for positive-semidefiniteness checks.
inline constexpr double kDefaultPsdTol = 1e-9;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Takes ownership of row-major `entries`; throws InvalidArgument on a
  /// size mismatch or non-finite entry.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ComplexMatrix diagonal(std::span<const double> values);
  /// |v><w|
  static ComplexMatrix outer(std::span<const Complex> v, std::span<const Complex> w);
  /// The all-ones n x n matrix.
  static ComplexMatrix ones(std::size_t n);
  /// e_ij = |i><j| in dimension n (0-based indices).
  static ComplexMatrix unit(std::size_t n, std::size_t i, std::size_t j);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> data() noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  double frobenius_norm() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> v);

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// ||a - b||_F; throws DimensionMismatch when shapes differ.
double distance(const ComplexMatrix& a, const ComplexMatrix& b);
/// max |a_ij - b_ij|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(std::span<const Complex> a, std::span<const Complex> b);

/// <a|b>, conjugate-linear in the first argument.
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double norm(std::span<const Complex> v);

/// ||M - M^dagger||_F
double hermiticity_defect(const ComplexMatrix& m);

/// A square complex matrix that is Hermitian to working precision.
///
/// Construction symmetrizes the input as (M + M^dagger)/2 after checking that
/// the pre-symmetrization defect is at most 1e-8 * max(1, ||M||_F).
class HermitianOperator {
 public:
  static constexpr double kAcceptTol = 1e-8;

  explicit HermitianOperator(const ComplexMatrix& m);

  std::size_t dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  double trace() const { return matrix_.trace().real(); }

  bool operator==(const HermitianOperator&) const = default;

 private:
  ComplexMatrix matrix_;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]

  ComplexVector eigenvector(std::size_t k) const;
};

/// Cyclic complex Jacobi diagonalization.
///
/// Sweeps every off-diagonal pair in row order until the off-diagonal
/// Frobenius norm drops to 1e-12 * max(1, ||M||_F). Throws ConvergenceFailure
/// after `max_sweeps` sweeps.
EigenDecomposition hermitian_eigen(const HermitianOperator& m, int max_sweeps = 100);

double min_eigenvalue(const HermitianOperator& m);

/// True iff the smallest eigenvalue is >= -tol.
bool is_psd(const HermitianOperator& m, double tol = kDefaultPsdTol);

/// Modified Gram-Schmidt with one reorthogonalization pass. Throws
/// RankDeficient when a pivot norm falls below 1e-10.
std::vector<ComplexVector> orthonormalize(std::span<const ComplexVector> vectors);

}  // namespace witnesskit
