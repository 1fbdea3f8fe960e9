#include "witnesskit/witnessfam.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "witnesskit/superops.hpp"

namespace witnesskit {

void ChoiFamilyParams::validate() const {
  if (d < 2) throw Error(ErrorCode::InvalidParams, "d >= 2 violated");
  if (a.size() != d) {
    throw Error(ErrorCode::InvalidParams, "a must have exactly d = " + std::to_string(d) +
                                              " entries (got " + std::to_string(a.size()) + ")");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!std::isfinite(a[i])) throw Error(ErrorCode::InvalidParams, "a_i must be finite");
    if (a[i] < 0.0) {
      throw Error(ErrorCode::InvalidParams,
                  "a_i >= 0 violated (a_" + std::to_string(i + 1) + " = " + std::to_string(a[i]) + ")");
    }
  }
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidParams, "x must be finite");
}

ComplexMatrix shift_operator(std::size_t d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "shift operator needs d >= 2");
  ComplexMatrix s(d, d);
  for (std::size_t i = 0; i < d; ++i) s((i + 1) % d, i) = 1.0;
  return s;
}

HermitianOperator build_wtilde(const ChoiFamilyParams& params) {
  params.validate();
  const std::size_t d = params.d;
  // Conjugating diag(a) by S^i moves a_k to position k + i; the corner e_00
  // conjugated as S^i e_00 S^j^dagger becomes |i><j|.
  ComplexMatrix w(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const std::size_t m = (k + i) % d;
      w(i * d + m, i * d + m) = params.a[k];
    }
    for (std::size_t j = 0; j < d; ++j) {
      if (j != i) w(i * d + i, j * d + j) = params.x;
    }
  }
  return HermitianOperator(w);
}

FeasibilityReport feasibility_report(const ChoiFamilyParams& params) {
  params.validate();
  const double dm1 = static_cast<double>(params.d - 1);
  const double a1 = params.a.front();
  const double x = params.x;
  const double sum = std::accumulate(params.a.begin(), params.a.end(), 0.0);

  FeasibilityReport r;
  r.psd_interval_ok = x >= -a1 / dm1 && x <= a1;
  r.y.reserve(params.d);
  for (double ak : params.a) r.y.push_back(sum / dm1 - ak);
  r.y_nonneg = std::all_of(r.y.begin(), r.y.end(), [](double y) { return y >= 0.0; });
  r.y_interval_ok = x >= -r.y.front() && x <= r.y.front() / dm1;
  r.eigen_confirmed = is_psd(build_wtilde(params), kDefaultPsdTol);
  return r;
}

HermitianOperator build_witness(const ChoiFamilyParams& params) {
  return partial_apply_hermitian(reduction_map(params.d), build_wtilde(params));
}

}  // namespace witnesskit
