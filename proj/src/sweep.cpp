#include "witnesskit/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "witnesskit/superops.hpp"
#include "witnesskit/verify.hpp"
#include "witnesskit/witnessfam.hpp"

namespace witnesskit {

namespace {

double parse_number(const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw Error(ErrorCode::ParseError, "not a number: '" + text + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double snap(double v) {
  const double snapped = std::round(v * 1e12) / 1e12;
  return snapped == 0.0 ? 0.0 : snapped;
}

}  // namespace

GridAxis GridAxis::parse(const std::string& spec) {
  const auto parts = split(spec, ':');
  GridAxis axis;
  if (parts.size() == 1) {
    axis.start = axis.stop = parse_number(parts[0]);
    axis.step = 1.0;
  } else if (parts.size() == 3) {
    axis.start = parse_number(parts[0]);
    axis.stop = parse_number(parts[1]);
    axis.step = parse_number(parts[2]);
  } else {
    throw Error(ErrorCode::ParseError, "grid '" + spec + "' is not start:stop:step");
  }
  if (axis.stop < axis.start) throw Error(ErrorCode::ParseError, "grid '" + spec + "' is empty");
  if (axis.step <= 0.0 && axis.stop != axis.start) {
    throw Error(ErrorCode::ParseError, "grid '" + spec + "' needs a positive step");
  }
  return axis;
}

std::vector<double> GridAxis::values() const {
  if (stop == start) return {snap(start)};
  const double span = (stop - start) / step;
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(snap(start + static_cast<double>(i) * step));
  return out;
}

std::vector<GridAxis> parse_axis_list(const std::string& spec) {
  std::vector<GridAxis> axes;
  for (const auto& part : split(spec, ',')) axes.push_back(GridAxis::parse(part));
  if (axes.empty()) throw Error(ErrorCode::ParseError, "empty axis list");
  return axes;
}

SweepRow evaluate_point(std::size_t d, const std::vector<double>& a, double x,
                        const SweepConfig& config) {
  const ChoiFamilyParams params{d, a, x};
  const HermitianOperator wtilde = build_wtilde(params);
  const HermitianOperator w = build_witness(params);
  const WitnessVerdict verdict = certify_via_map(w, inverse_reduction_map(d), config.tol);

  SweepRow row;
  row.d = d;
  row.a = a;
  row.x = x;
  row.wtilde_min_eig = min_eigenvalue(wtilde);
  row.w_min_eig = verdict.min_eigenvalue;
  row.certified = verdict.certified;
  row.blockpos_min =
      blockpos_min(w, SeesawOptions{config.restarts, config.iters, config.seed}).value;
  row.detect_maxent =
      (w.matrix() * maximally_entangled_projector(d).matrix()).trace().real();
  return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  if (config.a_axes.size() != config.d) {
    throw Error(ErrorCode::InvalidParams, "a grid needs exactly d = " + std::to_string(config.d) +
                                              " components");
  }
  std::vector<std::vector<double>> a_values;
  for (const auto& axis : config.a_axes) a_values.push_back(axis.values());
  const std::vector<double> x_values = config.x_axis.values();

  // Enumerate the grid in lexicographic order, validating every point first
  // so a bad grid fails before any work starts.
  std::vector<std::pair<std::vector<double>, double>> points;
  std::vector<std::size_t> idx(config.d, 0);
  while (true) {
    std::vector<double> a(config.d);
    for (std::size_t i = 0; i < config.d; ++i) a[i] = a_values[i][idx[i]];
    for (double x : x_values) {
      ChoiFamilyParams{config.d, a, x}.validate();
      points.emplace_back(a, x);
    }
    std::size_t k = config.d;
    while (k > 0 && ++idx[k - 1] == a_values[k - 1].size()) idx[--k] = 0;
    if (k == 0) break;
  }

  std::vector<SweepRow> rows(points.size());
  auto work = [&](std::size_t i) { rows[i] = evaluate_point(config.d, points[i].first, points[i].second, config); };

  if (!config.parallel || points.size() < 2) {
    for (std::size_t i = 0; i < points.size(); ++i) work(i);
    return rows;
  }

  const std::size_t n_threads =
      std::min<std::size_t>(points.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n_threads);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < n_threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = next++; i < points.size(); i = next++) work(i);
      } catch (...) {
        errors[t] = std::current_exception();
        next = points.size();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    std::string a;
    for (std::size_t i = 0; i < r.a.size(); ++i) a += (i ? ";" : "") + format_double(r.a[i]);
    out << r.d << ',' << a << ',' << format_double(r.x) << ',' << format_double(r.wtilde_min_eig)
        << ',' << format_double(r.w_min_eig) << ',' << (r.certified ? 1 : 0) << ','
        << format_double(r.blockpos_min) << ',' << format_double(r.detect_maxent) << '\n';
  }
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSweepCsvHeader) {
    throw Error(ErrorCode::ParseError, "sweep CSV: missing or unexpected header");
  }
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 8) throw Error(ErrorCode::ParseError, "sweep CSV: expected 8 fields");
    SweepRow r;
    r.d = static_cast<std::size_t>(parse_number(f[0]));
    for (const auto& s : split(f[1], ';')) r.a.push_back(parse_number(s));
    r.x = parse_number(f[2]);
    r.wtilde_min_eig = parse_number(f[3]);
    r.w_min_eig = parse_number(f[4]);
    r.certified = f[5] == "1";
    r.blockpos_min = parse_number(f[6]);
    r.detect_maxent = parse_number(f[7]);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace witnesskit
