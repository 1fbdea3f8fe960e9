#include "witnesskit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "witnesskit/random.hpp"

namespace witnesskit {

namespace {

std::size_t local_dim(std::size_t dim) {
  const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(dim))));
  if (d * d != dim || d < 2) {
    throw Error(ErrorCode::DimensionMismatch,
                "operator dimension " + std::to_string(dim) + " is not d^2 with d >= 2");
  }
  return d;
}

// (M)_kl = <psi (x) k| W |psi (x) l>
ComplexMatrix contract_first(const ComplexMatrix& w, std::span<const Complex> psi, std::size_t d) {
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Complex c = std::conj(psi[i]) * psi[j];
      if (c == Complex(0.0)) continue;
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) m(k, l) += c * w(i * d + k, j * d + l);
    }
  return m;
}

// (N)_ij = <i (x) phi| W |j (x) phi>
ComplexMatrix contract_second(const ComplexMatrix& w, std::span<const Complex> phi, std::size_t d) {
  ComplexMatrix m(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) {
      const Complex c = std::conj(phi[k]) * phi[l];
      if (c == Complex(0.0)) continue;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) += c * w(i * d + k, j * d + l);
    }
  return m;
}

struct Minimizer {
  double value;
  ComplexVector vector;
};

Minimizer minimize(const ComplexMatrix& m) {
  const EigenDecomposition eig = hermitian_eigen(HermitianOperator(m));
  return {eig.eigenvalues.front(), eig.eigenvector(0)};
}

}  // namespace

void ProductState::validate() const {
  constexpr double kTol = 1e-10;
  if (std::abs(norm(psi) - 1.0) > kTol || std::abs(norm(phi) - 1.0) > kTol) {
    throw Error(ErrorCode::NotNormalized, "product state factors must be unit vectors");
  }
}

WitnessVerdict certify_via_map(const HermitianOperator& w, const SuperOperator& lam, double tol) {
  if (tol < 0.0) throw Error(ErrorCode::InvalidArgument, "tolerance must be >= 0");
  if (w.dim() != lam.d() * lam.d()) {
    throw Error(ErrorCode::DimensionMismatch,
                "witness dimension " + std::to_string(w.dim()) + " does not match map dimension " +
                    std::to_string(lam.d()) + "^2");
  }
  WitnessVerdict v;
  v.hermitian = true;
  v.map_name = lam.name();

  const EigenDecomposition eig = hermitian_eigen(w);
  v.min_eigenvalue = eig.eigenvalues.front();
  v.negative_witness_vector = eig.eigenvector(0);

  const ComplexMatrix transformed = partial_apply(lam, w.matrix());
  const double defect = hermiticity_defect(transformed);
  v.transformed_hermitian =
      defect <= HermitianOperator::kAcceptTol * std::max(1.0, transformed.frobenius_norm());
  if (v.transformed_hermitian) {
    v.transformed_min_eigenvalue = min_eigenvalue(HermitianOperator(transformed));
  } else {
    // Report the Hermitian part's spectrum; certification is refused below.
    v.transformed_min_eigenvalue = min_eigenvalue(
        HermitianOperator((transformed + transformed.adjoint()) * Complex(0.5)));
  }

  if (v.min_eigenvalue >= -tol) {
    v.reason = "no negative eigenvalue";
  } else if (!v.transformed_hermitian) {
    v.reason = "transformed operator is not Hermitian";
  } else if (v.transformed_min_eigenvalue < -tol) {
    v.reason = "transformed operator is not positive semidefinite";
  } else {
    v.certified = true;
    v.reason = "certified";
  }
  return v;
}

WitnessVerdict certify_via_map(const ComplexMatrix& w, const SuperOperator& lam, double tol) {
  try {
    return certify_via_map(HermitianOperator(w), lam, tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotHermitian) throw;
  }
  WitnessVerdict v;
  v.map_name = lam.name();
  v.reason = "operator is not Hermitian";
  v.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
  v.transformed_min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
  return v;
}

double product_expectation(const ComplexMatrix& w, const ProductState& s) {
  s.validate();
  const ComplexVector v = s.vector();
  if (w.rows() != v.size() || w.cols() != v.size()) {
    throw Error(ErrorCode::DimensionMismatch, "product state does not match operator dimension");
  }
  const Complex e = inner(v, w * std::span<const Complex>(v));
  if (std::abs(e.imag()) > 1e-8) {
    throw Error(ErrorCode::NonRealExpectation,
                "expectation has imaginary part " + std::to_string(e.imag()));
  }
  return e.real();
}

double product_expectation(const HermitianOperator& w, const ProductState& s) {
  return product_expectation(w.matrix(), s);
}

std::vector<double> seesaw_descent(const HermitianOperator& w, ComplexVector psi0, int iters,
                                   double stop_tol, ProductState* state) {
  if (iters < 1) throw Error(ErrorCode::InvalidArgument, "iters must be >= 1");
  const std::size_t d = local_dim(w.dim());
  if (psi0.size() != d) throw Error(ErrorCode::DimensionMismatch, "psi0 has the wrong length");
  const double n0 = norm(psi0);
  if (!(n0 > 0.0)) throw Error(ErrorCode::InvalidArgument, "psi0 must be nonzero");
  for (auto& z : psi0) z /= n0;

  ProductState current{std::move(psi0), {}};
  std::vector<double> trace;
  double previous = std::numeric_limits<double>::infinity();
  for (int it = 0; it < iters; ++it) {
    Minimizer step = minimize(contract_first(w.matrix(), current.psi, d));
    current.phi = std::move(step.vector);
    trace.push_back(step.value);

    step = minimize(contract_second(w.matrix(), current.phi, d));
    current.psi = std::move(step.vector);
    trace.push_back(step.value);

    if (previous - step.value < stop_tol) break;
    previous = step.value;
  }
  if (state) *state = std::move(current);
  return trace;
}

BlockPosResult blockpos_min(const HermitianOperator& w, const SeesawOptions& options) {
  if (options.restarts < 1) throw Error(ErrorCode::InvalidArgument, "restarts must be >= 1");
  if (options.iters < 1) throw Error(ErrorCode::InvalidArgument, "iters must be >= 1");
  const std::size_t d = local_dim(w.dim());

  BlockPosResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (int r = 0; r < options.restarts; ++r) {
    Rng rng = make_rng(options.seed, static_cast<std::uint64_t>(r));
    ProductState state;
    const std::vector<double> trace =
        seesaw_descent(w, random_unit_vector(d, rng), options.iters, options.stop_tol, &state);
    if (trace.back() < best.value) {
      best.value = trace.back();
      best.state = std::move(state);
      best.restart = r;
    }
  }
  return best;
}

Detection detect(const HermitianOperator& w, const HermitianOperator& rho, double tol) {
  if (w.dim() != rho.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "witness and state dimensions differ");
  }
  if (std::abs(rho.trace() - 1.0) > 1e-9) {
    throw Error(ErrorCode::NotAState,
                "state trace check failed: Tr(rho) = " + std::to_string(rho.trace()));
  }
  if (!is_psd(rho, tol)) {
    throw Error(ErrorCode::NotAState, "state positivity check failed: rho has a negative eigenvalue");
  }
  const double value = (w.matrix() * rho.matrix()).trace().real();
  return {value < -tol, value};
}

}  // namespace witnesskit
