#include <gtest/gtest.h>

#include <cmath>

#include "witnesskit/projectors.hpp"
#include "witnesskit/random.hpp"
#include "witnesskit/superops.hpp"

namespace witnesskit {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

TEST(FromOrthonormalVectors, Examples) {
  const std::vector<ComplexVector> one{{1.0, 0.0, 0.0}};
  const OrthoProjector p1 = from_orthonormal_vectors(one);
  EXPECT_EQ(p1.rank(), 1u);
  EXPECT_EQ(p1.matrix().matrix(), ComplexMatrix::unit(3, 0, 0));

  const std::vector<ComplexVector> two{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
  const OrthoProjector p2 = from_orthonormal_vectors(two);
  EXPECT_EQ(p2.rank(), 2u);
  const std::vector<double> d110{1, 1, 0};
  EXPECT_EQ(p2.matrix().matrix(), ComplexMatrix::diagonal(d110));
}

TEST(FromOrthonormalVectors, BasisIndependent) {
  const double s = 1.0 / std::sqrt(2.0);
  const std::vector<ComplexVector> basis_a{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
  const std::vector<ComplexVector> basis_b{{s, Complex(0.0, s), 0.0}, {s, Complex(0.0, -s), 0.0}};
  EXPECT_LE(distance(from_orthonormal_vectors(basis_a).matrix().matrix(),
                     from_orthonormal_vectors(basis_b).matrix().matrix()),
            1e-10);
}

TEST(FromOrthonormalVectors, RejectsNonOrthonormal) {
  const std::vector<ComplexVector> bad{{1.0, 0.0}, {1.0, 1.0}};
  EXPECT_EQ(code_of([&] { from_orthonormal_vectors(bad); }), ErrorCode::NotOrthonormal);
}

TEST(OrthoProjector, RejectsNonIdempotent) {
  const std::vector<double> half{0.5, 0.5};
  EXPECT_EQ(code_of([&] { OrthoProjector(HermitianOperator(ComplexMatrix::diagonal(half))); }),
            ErrorCode::NotProjector);
}

TEST(RandomProjector, FullRankIsIdentity) {
  for (std::uint64_t seed : {0u, 1u, 99u}) {
    EXPECT_LE(distance(random_projector(3, 3, seed).matrix().matrix(), ComplexMatrix::identity(3)),
              1e-10);
  }
}

TEST(RandomProjector, InvariantsAndDeterminism) {
  const OrthoProjector p = random_projector(4, 2, 7);
  const ComplexMatrix& m = p.matrix().matrix();
  EXPECT_EQ(p.rank(), 2u);
  EXPECT_NEAR(m.trace().real(), 2.0, 1e-10);
  EXPECT_LE(distance(m * m, m), 1e-10);
  EXPECT_EQ(m, random_projector(4, 2, 7).matrix().matrix());
  EXPECT_NE(m, random_projector(4, 2, 8).matrix().matrix());
}

TEST(RandomProjector, InvalidRank) {
  EXPECT_EQ(code_of([] { random_projector(3, 0, 1); }), ErrorCode::InvalidRank);
  EXPECT_EQ(code_of([] { random_projector(3, 4, 1); }), ErrorCode::InvalidRank);
}

TEST(Complement, Examples) {
  const OrthoProjector e11 = from_orthonormal_vectors(std::vector<ComplexVector>{{1.0, 0.0, 0.0}});
  const OrthoProjector c = complement(e11);
  const std::vector<double> d011{0, 1, 1};
  EXPECT_EQ(c.rank(), 2u);
  EXPECT_EQ(c.matrix().matrix(), ComplexMatrix::diagonal(d011));

  const std::vector<ComplexVector> two{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
  const OrthoProjector p = from_orthonormal_vectors(two);
  const OrthoProjector q = complement(p);
  EXPECT_EQ(q.matrix().matrix(), ComplexMatrix::unit(3, 2, 2));
  EXPECT_LE(distance(apply(inverse_reduction_map(3), p.matrix().matrix()), q.matrix().matrix()),
            1e-15);

  const OrthoProjector zero = complement(random_projector(3, 3, 4));
  EXPECT_TRUE(zero.degenerate());
  EXPECT_EQ(zero.rank(), 0u);
  EXPECT_LE(zero.matrix().matrix().frobenius_norm(), 1e-10);
}

TEST(Complement, RoundTripOverRandomProjectors) {
  std::uint64_t seed = 1000;
  for (std::size_t d = 2; d <= 6; ++d) {
    for (std::size_t k = 1; k <= d; ++k) {
      for (int t = 0; t < 100; ++t) {
        const OrthoProjector p = random_projector(d, k, seed++);
        const OrthoProjector q = complement(p);
        EXPECT_EQ(q.rank(), d - k);
        EXPECT_LE(distance(complement(q).matrix().matrix(), p.matrix().matrix()), 1e-10);
        const ComplexMatrix zero(d, d);
        EXPECT_LE(distance(p.matrix().matrix() * q.matrix().matrix(), zero), 1e-10);
        EXPECT_LE(distance(q.matrix().matrix() * p.matrix().matrix(), zero), 1e-10);
      }
    }
  }
}

TEST(InverseReductionOnProjectors, CoRankOneMapsToComplement) {
  std::uint64_t seed = 5000;
  for (std::size_t d : {3u, 4u, 5u}) {
    for (int t = 0; t < 100; ++t) {
      const OrthoProjector p = random_projector(d, d - 1, seed++);
      const ComplexMatrix image = apply(inverse_reduction_map(d), p.matrix().matrix());
      EXPECT_LE(distance(image, complement(p).matrix().matrix()), 1e-10);
      const OrthoProjector as_projector{HermitianOperator(image)};
      EXPECT_EQ(as_projector.rank(), 1u);
    }
  }
}

TEST(InverseReductionOnProjectors, EveryRankOneProjectorIsAttained) {
  Rng rng = make_rng(31);
  for (std::size_t d : {3u, 4u, 5u}) {
    for (int t = 0; t < 100; ++t) {
      const ComplexVector psi = random_unit_vector(d, rng);
      const OrthoProjector q = from_orthonormal_vectors(std::vector<ComplexVector>{psi});
      const ComplexMatrix back = apply(inverse_reduction_map(d), complement(q).matrix().matrix());
      EXPECT_LE(distance(back, q.matrix().matrix()), 1e-10);
    }
  }
}

// The kernel of a rank-(d-1) projector is one-dimensional, so two unit
// vectors in it differ by a phase.
TEST(Complement, KernelVectorsDifferByPhase) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t d = 4;
    const OrthoProjector p = random_projector(d, d - 1, seed);
    const ComplexVector u = hermitian_eigen(p.matrix()).eigenvector(0);

    // Second kernel vector: project a random vector onto 1 - P and normalize.
    Rng rng = make_rng(seed, 1);
    const ComplexVector g = random_gaussian_vector(d, rng);
    ComplexVector v = complement(p).matrix().matrix() * std::span<const Complex>(g);
    const double n = norm(v);
    for (auto& z : v) z /= n;

    const Complex phase = inner(u, v);
    EXPECT_NEAR(std::abs(phase), 1.0, 1e-10);
    for (std::size_t i = 0; i < d; ++i) EXPECT_LE(std::abs(v[i] - phase * u[i]), 1e-10);
  }
}

TEST(ProductProjector, Examples) {
  const ComplexVector psi{1.0, 0.0, 0.0};
  const OrthoProjector p1 = product_projector(psi, std::vector<ComplexVector>{{0.0, 1.0, 0.0}});
  EXPECT_EQ(p1.rank(), 1u);
  EXPECT_EQ(p1.matrix().matrix(), ComplexMatrix::unit(9, 1, 1));

  const OrthoProjector p2 =
      product_projector(psi, std::vector<ComplexVector>{{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}});
  EXPECT_EQ(p2.rank(), 2u);
  const std::vector<double> diag{0, 1, 1, 0, 0, 0, 0, 0, 0};
  EXPECT_EQ(p2.matrix().matrix(), ComplexMatrix::diagonal(diag));
}

TEST(ProductProjector, RandomMatchesKron) {
  Rng rng = make_rng(8);
  for (int t = 0; t < 30; ++t) {
    const ComplexVector psi = random_unit_vector(3, rng);
    const std::vector<ComplexVector> raw{random_gaussian_vector(3, rng), random_gaussian_vector(3, rng)};
    const auto phis = orthonormalize(raw);
    const OrthoProjector p = product_projector(psi, phis);
    const ComplexMatrix& m = p.matrix().matrix();
    EXPECT_NEAR(m.trace().real(), 2.0, 1e-10);
    EXPECT_LE(distance(m * m, m), 1e-10);
    const ComplexMatrix expected =
        kron(ComplexMatrix::outer(psi, psi),
             ComplexMatrix::outer(phis[0], phis[0]) + ComplexMatrix::outer(phis[1], phis[1]));
    EXPECT_LE(distance(m, expected), 1e-12);
  }
}

TEST(ProductProjector, Errors) {
  EXPECT_EQ(code_of([] {
              product_projector(ComplexVector{2.0, 0.0}, std::vector<ComplexVector>{{1.0, 0.0}});
            }),
            ErrorCode::NotNormalized);
  EXPECT_EQ(code_of([] {
              product_projector(ComplexVector{1.0, 0.0},
                                std::vector<ComplexVector>{{1.0, 0.0}, {1.0, 0.0}});
            }),
            ErrorCode::NotOrthonormal);
}

}  // namespace
}  // namespace witnesskit
