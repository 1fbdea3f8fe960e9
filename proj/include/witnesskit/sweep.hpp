#pragma once

// Parameter sweeps over the Choi family with CSV output.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "witnesskit/densecore.hpp"

namespace witnesskit {

/// Inclusive arithmetic grid start, start+step, ..., <= stop.
struct GridAxis {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  /// "start:stop:step" or a single number. Throws ParseError on malformed or
  /// empty grids (step <= 0 with start != stop, or stop < start).
  static GridAxis parse(const std::string& spec);
  /// Grid points, each snapped to a multiple of 1e-12 so that e.g.
  /// -0.6 + 1*0.1 reads back as -0.5.
  std::vector<double> values() const;
};

/// Comma-separated per-component axes, e.g. "0:2:0.5,0,0".
std::vector<GridAxis> parse_axis_list(const std::string& spec);

struct SweepConfig {
  std::size_t d = 3;
  std::vector<GridAxis> a_axes;  // one per a_i
  GridAxis x_axis;
  int restarts = 30;
  int iters = 50;
  std::uint64_t seed = 1;
  double tol = kDefaultPsdTol;
  bool parallel = false;
};

struct SweepRow {
  std::size_t d = 0;
  std::vector<double> a;
  double x = 0.0;
  double wtilde_min_eig = 0.0;
  double w_min_eig = 0.0;
  bool certified = false;
  double blockpos_min = 0.0;
  double detect_maxent = 0.0;  // Tr(W P_d^+)
};

inline constexpr const char* kSweepCsvHeader =
    "d,a,x,wtilde_min_eig,w_min_eig,certified,blockpos_min,detect_maxent";

/// Rows in lexicographic grid order (a_1 outermost, x innermost), independent
/// of `parallel`.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

SweepRow evaluate_point(std::size_t d, const std::vector<double>& a, double x,
                        const SweepConfig& config);

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);
std::vector<SweepRow> read_sweep_csv(std::istream& in);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

}  // namespace witnesskit
