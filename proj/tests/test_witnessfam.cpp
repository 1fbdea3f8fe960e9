#include <gtest/gtest.h>

#include <numeric>

#include "fixtures.hpp"
#include "witnesskit/random.hpp"
#include "witnesskit/superops.hpp"
#include "witnesskit/verify.hpp"
#include "witnesskit/witnessfam.hpp"

namespace witnesskit {
namespace {

using testing::choi_transformed;
using testing::choi_witness;
using testing::oracle_min_eigenvalue;

ComplexMatrix power(const ComplexMatrix& m, std::size_t k) {
  ComplexMatrix out = ComplexMatrix::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) out = out * m;
  return out;
}

// sum_ij e_ij (x) W~_ij assembled from explicit shift powers.
ComplexMatrix wtilde_by_blocks(const ChoiFamilyParams& p) {
  const std::size_t d = p.d;
  const ComplexMatrix s = shift_operator(d);
  const ComplexMatrix corner = ComplexMatrix::unit(d, 0, 0) * Complex(p.x);
  ComplexMatrix w(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const ComplexMatrix block = (i == j)
                                      ? power(s, i) * ComplexMatrix::diagonal(p.a) * power(s, i).adjoint()
                                      : power(s, i) * corner * power(s, j).adjoint();
      w += kron(ComplexMatrix::unit(d, i, j), block);
    }
  return w;
}

ChoiFamilyParams random_params(std::size_t d, Rng& rng) {
  std::uniform_real_distribution<double> a_dist(0.0, 2.0);
  std::uniform_real_distribution<double> x_dist(-2.0, 2.0);
  ChoiFamilyParams p{d, std::vector<double>(d), 0.0};
  for (auto& ai : p.a) ai = a_dist(rng);
  p.x = x_dist(rng);
  return p;
}

TEST(ShiftOperator, DimensionThree) {
  const ComplexMatrix s = shift_operator(3);
  const ComplexVector e1{1.0, 0.0, 0.0};
  const ComplexVector e2{0.0, 1.0, 0.0};
  const ComplexVector e3{0.0, 0.0, 1.0};
  EXPECT_EQ(s * std::span<const Complex>(e1), e2);
  EXPECT_EQ(s * std::span<const Complex>(e2), e3);
  EXPECT_EQ(s * std::span<const Complex>(e3), e1);
  EXPECT_EQ(s * s * s, ComplexMatrix::identity(3));
}

TEST(ShiftOperator, DimensionTwoSwaps) {
  ComplexMatrix swap(2, 2);
  swap(0, 1) = 1.0;
  swap(1, 0) = 1.0;
  EXPECT_EQ(shift_operator(2), swap);
}

TEST(ShiftOperator, UnitaryWithOrderD) {
  for (std::size_t d = 2; d <= 6; ++d) {
    const ComplexMatrix s = shift_operator(d);
    EXPECT_EQ(s * s.adjoint(), ComplexMatrix::identity(d));
    EXPECT_EQ(power(s, d), ComplexMatrix::identity(d));
  }
}

TEST(BuildWtilde, ChoiSeed) {
  EXPECT_EQ(build_wtilde({3, {1, 0, 0}, 1}).matrix(), choi_transformed());
}

TEST(BuildWtilde, ZeroCornerIsDiagonal) {
  const std::vector<double> diag{1, 0, 0, 0, 1, 0, 0, 0, 1};
  EXPECT_EQ(build_wtilde({3, {1, 0, 0}, 0}).matrix(), ComplexMatrix::diagonal(diag));
}

TEST(BuildWtilde, QubitCase) {
  ComplexMatrix expected = ComplexMatrix::identity(4);
  expected(0, 3) = 1.0;
  expected(3, 0) = 1.0;
  EXPECT_EQ(build_wtilde({2, {1, 1}, 1}).matrix(), expected);
}

TEST(BuildWtilde, MatchesShiftPowerConstruction) {
  Rng rng = make_rng(41);
  for (std::size_t d = 2; d <= 5; ++d) {
    for (int t = 0; t < 20; ++t) {
      const ChoiFamilyParams p = random_params(d, rng);
      EXPECT_EQ(build_wtilde(p).matrix(), wtilde_by_blocks(p));
    }
  }
}

TEST(BuildWtilde, SparseAndReal) {
  Rng rng = make_rng(42);
  for (std::size_t d = 2; d <= 6; ++d) {
    const ChoiFamilyParams p = random_params(d, rng);
    const ComplexMatrix w = build_wtilde(p).matrix();
    std::size_t nonzero = 0;
    for (const auto& z : w.data()) {
      EXPECT_EQ(z.imag(), 0.0);
      nonzero += z != Complex(0.0);
    }
    EXPECT_LE(nonzero, d * d + d * (d - 1));
  }
}

TEST(Params, Validation) {
  EXPECT_THROW(build_wtilde({3, {-1, 0, 0}, 0}), Error);
  EXPECT_THROW(build_wtilde({3, {1, 0}, 0}), Error);
  EXPECT_THROW(build_wtilde({1, {1}, 0}), Error);
  EXPECT_THROW(build_wtilde({3, {1, 0, 0}, INFINITY}), Error);
  try {
    ChoiFamilyParams{3, {-1, 0, 0}, 0}.validate();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidParams);
    EXPECT_NE(std::string(e.what()).find("a_i >= 0 violated"), std::string::npos);
  }
}

TEST(Feasibility, ChoiBoundary) {
  const FeasibilityReport r = feasibility_report({3, {1, 0, 0}, 1});
  EXPECT_TRUE(r.psd_interval_ok);
  EXPECT_TRUE(r.eigen_confirmed);
  // The printed y-conditions reject this point; the report keeps them visible.
  EXPECT_EQ(r.y, (std::vector<double>{-0.5, 0.5, 0.5}));
  EXPECT_FALSE(r.y_nonneg);
}

TEST(Feasibility, JustOutsideInterval) {
  const ChoiFamilyParams p{3, {1, 0, 0}, 1.01};
  const FeasibilityReport r = feasibility_report(p);
  EXPECT_FALSE(r.psd_interval_ok);
  EXPECT_FALSE(r.eigen_confirmed);
  // The |ii> submatrix [[1, x, x], [x, 1, x], [x, x, 1]] has eigenvalue 1 - x.
  ComplexMatrix a = ComplexMatrix::ones(3) * Complex(1.01);
  for (int i = 0; i < 3; ++i) a(i, i) = 1.0;
  EXPECT_NEAR(oracle_min_eigenvalue(a), -0.01, 1e-12);
}

TEST(Feasibility, ZeroParameters) {
  const ChoiFamilyParams p{3, {0, 0, 0}, 0};
  EXPECT_TRUE(feasibility_report(p).eigen_confirmed);
  EXPECT_TRUE(feasibility_report(p).psd_interval_ok);
  EXPECT_EQ(build_wtilde(p).matrix().frobenius_norm(), 0.0);
}

TEST(Feasibility, IntervalMatchesEigenOracle) {
  Rng rng = make_rng(43);
  for (std::size_t d : {3u, 4u, 5u}) {
    int checked = 0;
    int feasible = 0;
    for (int t = 0; t < 500; ++t) {
      const ChoiFamilyParams p = random_params(d, rng);
      const double lo = -p.a[0] / static_cast<double>(d - 1);
      const double hi = p.a[0];
      if (std::abs(p.x - lo) < 1e-7 || std::abs(p.x - hi) < 1e-7) continue;
      const FeasibilityReport r = feasibility_report(p);
      EXPECT_EQ(r.psd_interval_ok, r.eigen_confirmed) << "d=" << d << " x=" << p.x;
      EXPECT_EQ(r.eigen_confirmed, oracle_min_eigenvalue(build_wtilde(p).matrix()) >= -1e-9);
      ++checked;
      feasible += r.eigen_confirmed;
    }
    EXPECT_GT(checked, 490);
    EXPECT_GT(feasible, 20);
  }
}

TEST(BuildWitness, ReproducesChoiWitness) {
  EXPECT_EQ(build_witness({3, {1, 0, 0}, 1}).matrix(), choi_witness());
}

TEST(BuildWitness, ZeroCornerIsPsdDiagonal) {
  const HermitianOperator w = build_witness({3, {1, 0, 0}, 0});
  const std::vector<double> diag{0, 1, 1, 1, 0, 1, 1, 1, 0};
  EXPECT_EQ(w.matrix(), ComplexMatrix::diagonal(diag));
  EXPECT_GE(oracle_min_eigenvalue(w.matrix()), -1e-12);
}

TEST(BuildWitness, BlockFormula) {
  Rng rng = make_rng(44);
  for (std::size_t d = 2; d <= 5; ++d) {
    const ChoiFamilyParams p = random_params(d, rng);
    const double sum = std::accumulate(p.a.begin(), p.a.end(), 0.0);
    const ComplexMatrix s = shift_operator(d);
    ComplexMatrix expected(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const ComplexMatrix block =
            (i == j) ? ComplexMatrix::identity(d) * Complex(sum) -
                           power(s, i) * ComplexMatrix::diagonal(p.a) * power(s, i).adjoint()
                     : power(s, i) * ComplexMatrix::unit(d, 0, 0) * power(s, j).adjoint() *
                           Complex(-p.x);
        expected += kron(ComplexMatrix::unit(d, i, j), block);
      }
    EXPECT_LE(max_abs_diff(build_witness(p).matrix(), expected), 1e-12);
  }
}

TEST(BuildWitness, InverseReductionRecoversSeed) {
  Rng rng = make_rng(45);
  for (std::size_t d = 2; d <= 6; ++d) {
    const ChoiFamilyParams p = random_params(d, rng);
    const ComplexMatrix back = partial_apply(inverse_reduction_map(d), build_witness(p).matrix());
    EXPECT_LE(max_abs_diff(back, build_wtilde(p).matrix()), 1e-12);
  }
}

TEST(BuildWitness, FeasibleNonPsdPointsAreCertified) {
  Rng rng = make_rng(46);
  int certified = 0;
  for (std::size_t d : {3u, 4u}) {
    for (int t = 0; t < 200; ++t) {
      const ChoiFamilyParams p = random_params(d, rng);
      if (!feasibility_report(p).eigen_confirmed) continue;
      const HermitianOperator w = build_witness(p);
      if (min_eigenvalue(w) >= -1e-9) continue;
      EXPECT_TRUE(certify_via_map(w, inverse_reduction_map(d)).certified);
      ++certified;
    }
  }
  EXPECT_GT(certified, 10);
}

}  // namespace
}  // namespace witnesskit
