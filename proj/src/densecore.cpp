#include "witnesskit/densecore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace witnesskit {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotOrthonormal: return "NotOrthonormal";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotProjector: return "NotProjector";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NonRealExpectation: return "NonRealExpectation";
    case ErrorCode::NotAState: return "NotAState";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(op) + ": shape " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw Error(ErrorCode::InvalidArgument, "matrix entry count does not match its shape");
  }
  if (!all_finite()) {
    throw Error(ErrorCode::InvalidArgument, "matrix has non-finite entries");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v, std::span<const Complex> w) {
  ComplexMatrix m(v.size(), w.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) m(i, j) = v[i] * std::conj(w[j]);
  return m;
}

ComplexMatrix ComplexMatrix::ones(std::size_t n) {
  ComplexMatrix m(n, n);
  std::fill(m.data_.begin(), m.data_.end(), Complex(1.0));
  return m;
}

ComplexMatrix ComplexMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  ComplexMatrix m(n, n);
  m(i, j) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw Error(ErrorCode::DimensionMismatch, "trace of a non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const { return std::all_of(data_.begin(), data_.end(), finite); }

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_shape(*this, rhs, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_shape(*this, rhs, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix product: inner dimensions differ");
  }
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> v) {
  if (a.cols_ != v.size()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector product: dimensions differ");
  }
  ComplexVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < a.cols_; ++j) s += a(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

double distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "distance");
  double s = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) s += std::norm(a.data()[k] - b.data()[k]);
  return std::sqrt(s);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

ComplexVector kron(std::span<const Complex> a, std::span<const Complex> b) {
  ComplexVector out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "inner: lengths differ");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (!m.is_square()) return std::numeric_limits<double>::infinity();
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s += std::norm(m(i, j) - std::conj(m(j, i)));
  return std::sqrt(s);
}

HermitianOperator::HermitianOperator(const ComplexMatrix& m) {
  if (!m.is_square() || m.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "Hermitian operator needs a non-empty square matrix");
  }
  if (!m.all_finite()) throw Error(ErrorCode::InvalidArgument, "matrix has non-finite entries");
  const double defect = hermiticity_defect(m);
  if (defect > kAcceptTol * std::max(1.0, m.frobenius_norm())) {
    throw Error(ErrorCode::NotHermitian,
                "matrix is not Hermitian (||M - M^dagger||_F = " + std::to_string(defect) + ")");
  }
  matrix_ = m;
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    matrix_(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      matrix_(i, j) = avg;
      matrix_(j, i) = std::conj(avg);
    }
  }
}

ComplexVector EigenDecomposition::eigenvector(std::size_t k) const {
  ComplexVector v(eigenvectors.rows());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = eigenvectors(i, k);
  return v;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Zeroes a(p, q) with the unitary G = diag(1, e^{-i phi}) * [[c, s], [-s, c]]
// acting on coordinates (p, q): a <- G^dagger a G, v <- v G.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const Complex phase = apq / g;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * g);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex gpp = c;
  const Complex gpq = s;
  const Complex gqp = -s * std::conj(phase);
  const Complex gqq = c * std::conj(phase);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
}

}  // namespace

EigenDecomposition hermitian_eigen(const HermitianOperator& m, int max_sweeps) {
  ComplexMatrix a = m.matrix();
  const std::size_t n = a.rows();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = 1e-12 * std::max(1.0, a.frobenius_norm());

  bool converged = off_diagonal_norm(a) <= threshold;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    converged = off_diagonal_norm(a) <= threshold;
  }
  if (!converged) {
    throw Error(ErrorCode::ConvergenceFailure,
                "Jacobi diagonalization did not converge in " + std::to_string(max_sweeps) +
                    " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

double min_eigenvalue(const HermitianOperator& m) { return hermitian_eigen(m).eigenvalues.front(); }

bool is_psd(const HermitianOperator& m, double tol) {
  if (tol < 0.0) throw Error(ErrorCode::InvalidArgument, "is_psd: tolerance must be >= 0");
  return min_eigenvalue(m) >= -tol;
}

std::vector<ComplexVector> orthonormalize(std::span<const ComplexVector> vectors) {
  constexpr double kPivotTol = 1e-10;
  std::vector<ComplexVector> basis;
  basis.reserve(vectors.size());
  for (const auto& input : vectors) {
    if (!basis.empty() && input.size() != basis.front().size()) {
      throw Error(ErrorCode::DimensionMismatch, "orthonormalize: vectors differ in length");
    }
    ComplexVector w = input;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        const Complex coeff = inner(b, w);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= coeff * b[i];
      }
    }
    const double nrm = norm(w);
    if (!(nrm >= kPivotTol)) {
      throw Error(ErrorCode::RankDeficient,
                  "orthonormalize: vector " + std::to_string(basis.size()) +
                      " is linearly dependent on its predecessors");
    }
    for (auto& z : w) z /= nrm;
    basis.push_back(std::move(w));
  }
  return basis;
}

}  // namespace witnesskit
