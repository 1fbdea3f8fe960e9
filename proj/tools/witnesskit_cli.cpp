// witnesskit command-line front end. Talks to the library only through the
// C API in witnesskit.h.
//
// Exit codes: 0 success / certified / detected, 1 inconclusive / not detected,
// 2 usage or data error.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "witnesskit/witnesskit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(wk_status st, const std::string& context) {
  if (st != WK_SUCCESS) {
    throw DataError(context + ": " + wk_status_string(st) + ": " + wk_last_error());
  }
}

// Owns a wk_matrix handle.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Matrix&) = delete;
  Matrix& operator=(const Matrix&) = delete;
  ~Matrix() {
    if (h_) wk_matrix_destroy(&h_);
  }
  wk_matrix* out() { return &h_; }
  wk_matrix get() const { return h_; }

 private:
  wk_matrix h_ = nullptr;
};

class Verdict {
 public:
  Verdict() = default;
  Verdict(const Verdict&) = delete;
  Verdict& operator=(const Verdict&) = delete;
  ~Verdict() {
    if (h_) wk_verdict_destroy(&h_);
  }
  wk_verdict* out() { return &h_; }
  wk_verdict get() const { return h_; }

 private:
  wk_verdict h_ = nullptr;
};

template <class Fn>
std::string read_string(Fn&& fn, const std::string& context) {
  size_t len = 0;
  wk_status st = fn(nullptr, 0, &len);
  if (st != WK_ERR_BUFFER_TOO_SMALL) check(st, context);
  std::string s(len + 1, '\0');
  check(fn(s.data(), s.size(), &len), context);
  s.resize(len);
  return s;
}

std::vector<double> parse_a_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DataError("invalid --a entry '" + item + "'");
    }
  }
  return out;
}

struct LoadedMatrix {
  Matrix m;
  size_t d = 0;
  size_t dim = 0;
};

void load(const std::string& path, LoadedMatrix& lm, bool require_bipartite) {
  int hermitian = 0;
  check(wk_matrix_load_json(path.c_str(), lm.m.out(), &lm.d, &hermitian), "loading " + path);
  size_t rows = 0;
  size_t cols = 0;
  check(wk_matrix_shape(lm.m.get(), &rows, &cols), path);
  lm.dim = rows;
  if (require_bipartite && rows != lm.d * lm.d) {
    throw DataError(path + ": expected a bipartite operator of dimension d^2 = " +
                    std::to_string(lm.d * lm.d) + ", got " + std::to_string(rows));
  }
}

struct BuildOptions {
  size_t d = 3;
  std::string a;
  double x = 0.0;
  std::string output = "witness";
};

int cmd_build(const BuildOptions& o) {
  const std::vector<double> a = parse_a_list(o.a);
  if (a.size() != o.d) {
    throw DataError("--a must list exactly d = " + std::to_string(o.d) + " entries");
  }
  for (double ai : a) {
    if (ai < 0.0) throw DataError("a_i >= 0 violated");
  }
  Matrix wtilde;
  Matrix w;
  check(wk_family_build(o.d, a.data(), o.x, wtilde.out(), w.out()), "build");
  const std::string wtilde_path = o.output + ".wtilde.json";
  const std::string w_path = o.output + ".w.json";
  check(wk_matrix_save_json(wtilde.get(), o.d, 1, wtilde_path.c_str()), "writing " + wtilde_path);
  check(wk_matrix_save_json(w.get(), o.d, 1, w_path.c_str()), "writing " + w_path);

  std::cout << read_string(
                   [&](char* buf, size_t cap, size_t* len) {
                     return wk_family_feasibility_json(o.d, a.data(), o.x, buf, cap, len);
                   },
                   "feasibility")
            << "\n";
  std::cerr << "wrote " << wtilde_path << " and " << w_path << "\n";
  return kExitOk;
}

struct VerifyOptions {
  std::string input;
  std::string map = "inverse-reduction";
  double tol = 0.0;
  bool with_blockpos = false;
  int restarts = 30;
  int iters = 50;
  std::uint64_t seed = 1;
};

int cmd_verify(const VerifyOptions& o) {
  LoadedMatrix w;
  load(o.input, w, true);
  Verdict v;
  check(wk_certify(w.m.get(), o.map.c_str(), o.tol, v.out()), "verify");
  if (o.with_blockpos) {
    check(wk_verdict_attach_blockpos(v.get(), o.restarts, o.iters, o.seed), "blockpos");
  }
  std::cout << read_string(
                   [&](char* buf, size_t cap, size_t* len) {
                     return wk_verdict_to_json(v.get(), buf, cap, len);
                   },
                   "verdict")
            << "\n";
  int certified = 0;
  check(wk_verdict_certified(v.get(), &certified), "verdict");
  return certified ? kExitOk : kExitNegative;
}

struct DetectOptions {
  std::string witness;
  std::string state;
  double tol = 0.0;
};

int cmd_detect(const DetectOptions& o) {
  LoadedMatrix w;
  load(o.witness, w, true);
  LoadedMatrix rho;
  if (o.state == "builtin:maxent") {
    check(wk_maxent_projector(w.d, rho.m.out()), "builtin:maxent");
  } else {
    load(o.state, rho, false);
  }
  int detected = 0;
  double value = 0.0;
  check(wk_detect(w.m.get(), rho.m.get(), o.tol, &detected, &value), "detect");
  std::ostringstream js;
  js.precision(17);
  js << "{\"detected\": " << (detected ? "true" : "false") << ", \"value\": " << value << "}";
  std::cout << js.str() << "\n";
  return detected ? kExitOk : kExitNegative;
}

struct SweepOptions {
  size_t d = 3;
  std::string a_grid;
  std::string x_grid;
  std::string output = "sweep.csv";
  int restarts = 30;
  int iters = 50;
  std::uint64_t seed = 1;
  double tol = 0.0;
  bool parallel = false;
};

int cmd_sweep(const SweepOptions& o) {
  const wk_sweep_config cfg{o.d,        o.a_grid.c_str(), o.x_grid.c_str(), o.restarts,
                            o.iters,    o.seed,           o.tol,            o.parallel ? 1 : 0};
  size_t rows = 0;
  check(wk_sweep_run_csv(&cfg, o.output.c_str(), &rows), "sweep");
  std::cerr << "wrote " << rows << " rows to " << o.output << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"witnesskit: entanglement witnesses from the inverse reduction map"};
  app.require_subcommand(1);
  const double default_tol = wk_default_tolerance();

  BuildOptions build;
  auto* build_cmd = app.add_subcommand("build", "Build W~ and W = (1 (x) R) W~ for the Choi family");
  build_cmd->add_option("--d", build.d, "Local dimension")->required();
  build_cmd->add_option("--a", build.a, "Comma-separated diagonal weights a_1..a_d")->required();
  build_cmd->add_option("--x", build.x, "Off-diagonal weight")->required();
  build_cmd->add_option("--output", build.output,
                        "Output prefix; writes <prefix>.wtilde.json and <prefix>.w.json");

  VerifyOptions verify;
  verify.tol = default_tol;
  auto* verify_cmd = app.add_subcommand("verify", "Certify a witness candidate through a map");
  verify_cmd->add_option("--input", verify.input, "MatrixFile JSON of W")->required();
  verify_cmd->add_option("--map", verify.map, "Map name")
      ->check(CLI::IsMember({"inverse-reduction"}));
  verify_cmd->add_option("--tol", verify.tol, "PSD tolerance")->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--with-blockpos", verify.with_blockpos,
                       "Also run the seesaw product-state minimization");
  verify_cmd->add_option("--restarts", verify.restarts)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--iters", verify.iters)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify.seed);

  DetectOptions det;
  det.tol = default_tol;
  auto* detect_cmd = app.add_subcommand("detect", "Evaluate Tr(W rho) for a state");
  detect_cmd->add_option("--witness", det.witness, "MatrixFile JSON of W")->required();
  detect_cmd->add_option("--state", det.state, "MatrixFile JSON of rho, or builtin:maxent")
      ->required();
  detect_cmd->add_option("--tol", det.tol, "Tolerance")->check(CLI::NonNegativeNumber);

  SweepOptions sweep;
  sweep.tol = default_tol;
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep the Choi family over a parameter grid");
  sweep_cmd->add_option("--d", sweep.d, "Local dimension")->required();
  sweep_cmd->add_option("--a-grid", sweep.a_grid,
                        "Comma-separated per-component grids (value or start:stop:step)")
      ->required();
  sweep_cmd->add_option("--x-grid", sweep.x_grid, "start:stop:step or a value")->required();
  sweep_cmd->add_option("--output", sweep.output, "CSV output path");
  sweep_cmd->add_option("--restarts", sweep.restarts)->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--iters", sweep.iters)->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--seed", sweep.seed);
  sweep_cmd->add_option("--tol", sweep.tol)->check(CLI::NonNegativeNumber);
  sweep_cmd->add_flag("--parallel", sweep.parallel, "Evaluate grid points concurrently");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*build_cmd) return cmd_build(build);
    if (*verify_cmd) return cmd_verify(verify);
    if (*detect_cmd) return cmd_detect(det);
    if (*sweep_cmd) return cmd_sweep(sweep);
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
