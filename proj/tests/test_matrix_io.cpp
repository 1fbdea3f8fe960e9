#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>

#include "fixtures.hpp"
#include "witnesskit/matrix_io.hpp"
#include "witnesskit/random.hpp"

namespace witnesskit {
namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse_matrix_file(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

TEST(MatrixFile, RoundTripIsBitExact) {
  Rng rng = make_rng(21);
  std::uniform_real_distribution<double> exponent(-300.0, 300.0);
  for (int t = 0; t < 20; ++t) {
    ComplexMatrix m(4, 4);
    for (auto& z : m.data()) {
      const auto g = random_gaussian_vector(1, rng)[0];
      z = {g.real() * std::pow(10.0, exponent(rng) / 10.0), g.imag()};
    }
    const MatrixFile in{2, false, m};
    const MatrixFile out = parse_matrix_file(to_json(in));
    EXPECT_EQ(out.d, 2u);
    EXPECT_FALSE(out.hermitian);
    ASSERT_EQ(out.dim(), 4u);
    for (std::size_t k = 0; k < m.data().size(); ++k) {
      EXPECT_EQ(std::memcmp(&out.matrix.data()[k], &m.data()[k], sizeof(Complex)), 0);
    }
  }
}

TEST(MatrixFile, SaveLoadThroughDisk) {
  const auto path = std::filesystem::temp_directory_path() / "witnesskit_io_test.json";
  const MatrixFile in{3, true, testing::choi_witness()};
  save_matrix_file(in, path.string());
  const MatrixFile out = load_matrix_file(path.string());
  EXPECT_EQ(out.matrix, in.matrix);
  EXPECT_TRUE(out.hermitian);
  EXPECT_TRUE(out.bipartite());
  std::filesystem::remove(path);
}

TEST(MatrixFile, MissingImaginaryPartDefaultsToZero) {
  const MatrixFile f = parse_matrix_file(R"({"d": 2, "dim": 2, "re": [[1, 2], [3, 4]]})");
  EXPECT_EQ(f.matrix(1, 0), Complex(3.0));
  EXPECT_FALSE(f.bipartite());
}

TEST(MatrixFile, Malformed) {
  EXPECT_EQ(code_of("not json"), ErrorCode::ParseError);
  EXPECT_EQ(code_of("[1, 2]"), ErrorCode::ParseError);
  EXPECT_EQ(code_of(R"({"dim": 2, "re": [[1, 0], [0, 1]]})"), ErrorCode::ParseError);
  EXPECT_EQ(code_of(R"({"d": 2, "dim": 3, "re": [[1,0,0],[0,1,0],[0,0,1]]})"), ErrorCode::ParseError);
  EXPECT_EQ(code_of(R"({"d": 2, "dim": 2, "re": [[1, 0], [0]]})"), ErrorCode::ParseError);
  EXPECT_EQ(code_of(R"({"d": 2, "dim": 2, "re": [[1, "a"], [0, 1]]})"), ErrorCode::ParseError);
  EXPECT_EQ(code_of(R"({"d": 2, "dim": 2, "re": [[1, 0], [0, 1]], "hermitian": "yes"})"),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of(R"({"d": -2, "dim": 2, "re": [[1, 0], [0, 1]]})"), ErrorCode::ParseError);
}

TEST(MatrixFile, DeclaredHermitianIsValidated) {
  EXPECT_EQ(code_of(R"({"d": 2, "dim": 2, "hermitian": true, "re": [[1, 1], [0, 1]]})"),
            ErrorCode::NotHermitian);
  EXPECT_EQ(code_of(R"({"d": 2, "dim": 2, "hermitian": false, "re": [[1, 1], [0, 1]]})"),
            ErrorCode{});
}

TEST(MatrixFile, MissingFile) {
  try {
    load_matrix_file("/nonexistent/witnesskit.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IoError);
  }
}

}  // namespace
}  // namespace witnesskit
