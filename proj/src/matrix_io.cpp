#include "witnesskit/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace witnesskit {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::ParseError, "matrix file: " + what);
}

std::vector<std::vector<double>> read_grid(const json& j, const char* key, std::size_t dim) {
  if (!j.contains(key)) parse_fail(std::string("missing \"") + key + "\"");
  const json& rows = j.at(key);
  if (!rows.is_array() || rows.size() != dim) {
    parse_fail(std::string("\"") + key + "\" must be an array of " + std::to_string(dim) + " rows");
  }
  std::vector<std::vector<double>> out;
  out.reserve(dim);
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != dim) {
      parse_fail(std::string("\"") + key + "\" rows must have " + std::to_string(dim) + " entries");
    }
    std::vector<double> r;
    r.reserve(dim);
    for (const json& v : row) {
      if (!v.is_number()) parse_fail(std::string("\"") + key + "\" entries must be numbers");
      r.push_back(v.get<double>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::size_t read_size(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() < 1) {
    parse_fail(std::string("\"") + key + "\" must be a positive integer");
  }
  return j.at(key).get<std::size_t>();
}

}  // namespace

MatrixFile parse_matrix_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(e.what());
  }
  if (!j.is_object()) parse_fail("top level must be an object");

  MatrixFile file;
  file.d = read_size(j, "d");
  const std::size_t dim = read_size(j, "dim");
  if (dim != file.d && dim != file.d * file.d) {
    parse_fail("dim must equal d or d^2 (d = " + std::to_string(file.d) +
               ", dim = " + std::to_string(dim) + ")");
  }
  if (j.contains("hermitian")) {
    if (!j.at("hermitian").is_boolean()) parse_fail("\"hermitian\" must be a boolean");
    file.hermitian = j.at("hermitian").get<bool>();
  }
  const auto re = read_grid(j, "re", dim);
  const auto im = j.contains("im") ? read_grid(j, "im", dim)
                                   : std::vector<std::vector<double>>(dim, std::vector<double>(dim));
  std::vector<Complex> entries;
  entries.reserve(dim * dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) entries.emplace_back(re[r][c], im[r][c]);
  try {
    file.matrix = ComplexMatrix(dim, dim, std::move(entries));
  } catch (const Error& e) {
    parse_fail(e.what());
  }
  if (file.hermitian) {
    // Reject rather than silently symmetrize; the stored entries stay as written.
    (void)HermitianOperator(file.matrix);
  }
  return file;
}

std::string to_json(const MatrixFile& file) {
  const std::size_t dim = file.dim();
  json re = json::array();
  json im = json::array();
  for (std::size_t r = 0; r < dim; ++r) {
    json rr = json::array();
    json ri = json::array();
    for (std::size_t c = 0; c < dim; ++c) {
      rr.push_back(file.matrix(r, c).real());
      ri.push_back(file.matrix(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  json j;
  j["d"] = file.d;
  j["dim"] = dim;
  j["hermitian"] = file.hermitian;
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j.dump() + "\n";
}

MatrixFile load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix_file(ss.str());
}

void save_matrix_file(const MatrixFile& file, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << to_json(file);
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

}  // namespace witnesskit
