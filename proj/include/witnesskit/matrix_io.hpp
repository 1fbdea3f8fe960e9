#pragma once

// MatrixFile JSON:
//   {"d": 3, "dim": 9, "hermitian": true, "re": [[...], ...], "im": [[...], ...]}
// `dim` is d*d for bipartite operators and d for single-system ones. Doubles
// are written in shortest round-trip form, so save/load is bit-exact.

#include <string>

#include "witnesskit/densecore.hpp"

namespace witnesskit {

struct MatrixFile {
  std::size_t d = 0;
  bool hermitian = false;
  ComplexMatrix matrix;

  std::size_t dim() const noexcept { return matrix.rows(); }
  bool bipartite() const noexcept { return dim() == d * d; }
};

/// Throws ParseError on malformed content; NotHermitian when the file
/// declares hermitian:true but the matrix is not.
MatrixFile parse_matrix_file(const std::string& text);
std::string to_json(const MatrixFile& file);

MatrixFile load_matrix_file(const std::string& path);
void save_matrix_file(const MatrixFile& file, const std::string& path);

}  // namespace witnesskit
