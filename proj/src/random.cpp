#include "witnesskit/random.hpp"

#include <cmath>

namespace witnesskit {

Rng make_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

ComplexVector random_gaussian_vector(std::size_t d, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexVector v(d);
  for (auto& z : v) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = {re, im};
  }
  return v;
}

ComplexVector random_unit_vector(std::size_t d, Rng& rng) {
  ComplexVector v = random_gaussian_vector(d, rng);
  const double n = norm(v);
  for (auto& z : v) z /= n;
  return v;
}

HermitianOperator random_hermitian(std::size_t d, Rng& rng) {
  ComplexMatrix g(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const ComplexVector row = random_gaussian_vector(d, rng);
    for (std::size_t j = 0; j < d; ++j) g(i, j) = row[j];
  }
  return HermitianOperator((g + g.adjoint()) * Complex(0.5));
}

}  // namespace witnesskit
