#include "witnesskit/witnesskit.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "witnesskit/matrix_io.hpp"
#include "witnesskit/superops.hpp"
#include "witnesskit/sweep.hpp"
#include "witnesskit/verify.hpp"
#include "witnesskit/witnessfam.hpp"

struct wk_matrix_s {
  witnesskit::ComplexMatrix m;
};

struct wk_verdict_s {
  witnesskit::HermitianOperator w;
  witnesskit::WitnessVerdict verdict;
  double tol;
  std::optional<witnesskit::BlockPosResult> blockpos;
};

namespace {

using namespace witnesskit;
using nlohmann::json;

thread_local std::string g_last_error;

wk_status fail(wk_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs `fn`, translating exceptions into status codes.
template <class Fn>
wk_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return WK_SUCCESS;
  } catch (const Error& e) {
    return fail(static_cast<wk_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(WK_ERR_UNKNOWN, "out of memory");
  } catch (const std::exception& e) {
    return fail(WK_ERR_UNKNOWN, e.what());
  } catch (...) {
    return fail(WK_ERR_UNKNOWN, "unknown error");
  }
}

wk_status write_string(const std::string& s, char* buf, size_t cap, size_t* len) {
  if (!len) return fail(WK_ERR_NULL_POINTER, "len must not be null");
  *len = s.size();
  if (!buf || cap <= s.size()) return fail(WK_ERR_BUFFER_TOO_SMALL, "buffer too small");
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return WK_SUCCESS;
}

std::size_t local_dim_of(const ComplexMatrix& w) {
  const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(w.rows()))));
  if (!w.is_square() || d * d != w.rows() || d < 2) {
    throw Error(ErrorCode::DimensionMismatch,
                "operator must be d^2 x d^2 with d >= 2 (got " + std::to_string(w.rows()) + "x" +
                    std::to_string(w.cols()) + ")");
  }
  return d;
}

json vector_json(const ComplexVector& v) {
  json re = json::array();
  json im = json::array();
  for (const auto& z : v) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  return {{"re", re}, {"im", im}};
}

}  // namespace

#define WK_CHECK_PTR(p)                                                   \
  do {                                                                    \
    if (!(p)) return fail(WK_ERR_NULL_POINTER, #p " must not be null");   \
  } while (0)

#define WK_CHECK_HANDLE(h)                                                \
  do {                                                                    \
    if (!(h)) return fail(WK_ERR_INVALID_HANDLE, #h " is not a valid handle"); \
  } while (0)

extern "C" {

const char* wk_status_string(wk_status status) {
  switch (status) {
    case WK_SUCCESS: return "success";
    case WK_ERR_NULL_POINTER: return "null pointer";
    case WK_ERR_INVALID_HANDLE: return "invalid handle";
    case WK_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case WK_ERR_UNKNOWN: return "unknown error";
    default: break;
  }
  if (status >= WK_ERR_INVALID_ARGUMENT && status <= WK_ERR_IO) {
    return to_string(static_cast<ErrorCode>(status));
  }
  return "unrecognized status";
}

const char* wk_last_error(void) { return g_last_error.c_str(); }

double wk_default_tolerance(void) {
  if (const char* env = std::getenv("WITNESSKIT_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && std::isfinite(v) && v >= 0.0) return v;
  }
  return kDefaultPsdTol;
}

wk_status wk_matrix_create(size_t rows, size_t cols, const double* re, const double* im,
                           wk_matrix* out) {
  WK_CHECK_PTR(re);
  WK_CHECK_PTR(out);
  if (rows == 0 || cols == 0) return fail(WK_ERR_INVALID_ARGUMENT, "matrix shape must be positive");
  return guarded([&] {
    std::vector<Complex> entries(rows * cols);
    for (size_t k = 0; k < entries.size(); ++k) entries[k] = {re[k], im ? im[k] : 0.0};
    *out = new wk_matrix_s{ComplexMatrix(rows, cols, std::move(entries))};
  });
}

wk_status wk_matrix_destroy(wk_matrix* m) {
  WK_CHECK_PTR(m);
  WK_CHECK_HANDLE(*m);
  delete *m;
  *m = nullptr;
  return WK_SUCCESS;
}

wk_status wk_matrix_shape(wk_matrix m, size_t* rows, size_t* cols) {
  WK_CHECK_HANDLE(m);
  WK_CHECK_PTR(rows);
  WK_CHECK_PTR(cols);
  *rows = m->m.rows();
  *cols = m->m.cols();
  return WK_SUCCESS;
}

wk_status wk_matrix_get(wk_matrix m, size_t row, size_t col, double* re, double* im) {
  WK_CHECK_HANDLE(m);
  WK_CHECK_PTR(re);
  WK_CHECK_PTR(im);
  if (row >= m->m.rows() || col >= m->m.cols()) {
    return fail(WK_ERR_INVALID_ARGUMENT, "index out of range");
  }
  *re = m->m(row, col).real();
  *im = m->m(row, col).imag();
  return WK_SUCCESS;
}

wk_status wk_matrix_load_json(const char* path, wk_matrix* out, size_t* d, int* hermitian) {
  WK_CHECK_PTR(path);
  WK_CHECK_PTR(out);
  return guarded([&] {
    MatrixFile file = load_matrix_file(path);
    if (d) *d = file.d;
    if (hermitian) *hermitian = file.hermitian ? 1 : 0;
    *out = new wk_matrix_s{std::move(file.matrix)};
  });
}

wk_status wk_matrix_save_json(wk_matrix m, size_t d, int hermitian, const char* path) {
  WK_CHECK_HANDLE(m);
  WK_CHECK_PTR(path);
  return guarded([&] {
    const size_t dim = m->m.rows();
    if (!m->m.is_square() || d == 0 || (dim != d && dim != d * d)) {
      throw Error(ErrorCode::DimensionMismatch, "matrix dimension must be d or d^2");
    }
    save_matrix_file(MatrixFile{d, hermitian != 0, m->m}, path);
  });
}

wk_status wk_maxent_projector(size_t d, wk_matrix* out) {
  WK_CHECK_PTR(out);
  return guarded([&] { *out = new wk_matrix_s{maximally_entangled_projector(d).matrix()}; });
}

wk_status wk_partial_apply(const char* map_name, wk_matrix w, wk_matrix* out) {
  WK_CHECK_PTR(map_name);
  WK_CHECK_HANDLE(w);
  WK_CHECK_PTR(out);
  return guarded([&] {
    const SuperOperator lam = map_by_name(map_name, local_dim_of(w->m));
    *out = new wk_matrix_s{partial_apply(lam, w->m)};
  });
}

wk_status wk_family_build(size_t d, const double* a, double x, wk_matrix* wtilde, wk_matrix* w) {
  WK_CHECK_PTR(a);
  return guarded([&] {
    const ChoiFamilyParams params{d, std::vector<double>(a, a + d), x};
    auto wt = std::make_unique<wk_matrix_s>(wk_matrix_s{build_wtilde(params).matrix()});
    auto ww = std::make_unique<wk_matrix_s>(wk_matrix_s{build_witness(params).matrix()});
    if (wtilde) *wtilde = wt.release();
    if (w) *w = ww.release();
  });
}

wk_status wk_family_feasibility_json(size_t d, const double* a, double x, char* buf, size_t cap,
                                     size_t* len) {
  WK_CHECK_PTR(a);
  std::string text;
  const wk_status st = guarded([&] {
    const ChoiFamilyParams params{d, std::vector<double>(a, a + d), x};
    const FeasibilityReport r = feasibility_report(params);
    const json j = {{"d", d},
                    {"a", params.a},
                    {"x", x},
                    {"psd_interval_ok", r.psd_interval_ok},
                    {"y", r.y},
                    {"y_nonneg", r.y_nonneg},
                    {"y_interval_ok", r.y_interval_ok},
                    {"eigen_confirmed", r.eigen_confirmed}};
    text = j.dump(2);
  });
  if (st != WK_SUCCESS) return st;
  return write_string(text, buf, cap, len);
}

wk_status wk_certify(wk_matrix w, const char* map_name, double tol, wk_verdict* out) {
  WK_CHECK_HANDLE(w);
  WK_CHECK_PTR(map_name);
  WK_CHECK_PTR(out);
  if (!(tol >= 0.0)) return fail(WK_ERR_INVALID_ARGUMENT, "tolerance must be >= 0");
  return guarded([&] {
    const SuperOperator lam = map_by_name(map_name, local_dim_of(w->m));
    HermitianOperator h(w->m);
    WitnessVerdict verdict = certify_via_map(h, lam, tol);
    *out = new wk_verdict_s{std::move(h), std::move(verdict), tol, std::nullopt};
  });
}

wk_status wk_verdict_destroy(wk_verdict* v) {
  WK_CHECK_PTR(v);
  WK_CHECK_HANDLE(*v);
  delete *v;
  *v = nullptr;
  return WK_SUCCESS;
}

wk_status wk_verdict_certified(wk_verdict v, int* certified) {
  WK_CHECK_HANDLE(v);
  WK_CHECK_PTR(certified);
  *certified = v->verdict.certified ? 1 : 0;
  return WK_SUCCESS;
}

wk_status wk_verdict_min_eigenvalue(wk_verdict v, double* value) {
  WK_CHECK_HANDLE(v);
  WK_CHECK_PTR(value);
  *value = v->verdict.min_eigenvalue;
  return WK_SUCCESS;
}

wk_status wk_verdict_transformed_min_eigenvalue(wk_verdict v, double* value) {
  WK_CHECK_HANDLE(v);
  WK_CHECK_PTR(value);
  *value = v->verdict.transformed_min_eigenvalue;
  return WK_SUCCESS;
}

wk_status wk_verdict_attach_blockpos(wk_verdict v, int restarts, int iters, uint64_t seed) {
  WK_CHECK_HANDLE(v);
  return guarded([&] { v->blockpos = blockpos_min(v->w, SeesawOptions{restarts, iters, seed}); });
}

wk_status wk_verdict_to_json(wk_verdict v, char* buf, size_t cap, size_t* len) {
  WK_CHECK_HANDLE(v);
  std::string text;
  const wk_status st = guarded([&] {
    const WitnessVerdict& r = v->verdict;
    json j = {{"certified", r.certified},
              {"status", r.certified ? "certified" : "inconclusive"},
              {"reason", r.reason},
              {"map_name", r.map_name},
              {"tol", v->tol},
              {"hermitian", r.hermitian},
              {"min_eigenvalue", r.min_eigenvalue},
              {"transformed_min_eigenvalue", r.transformed_min_eigenvalue},
              {"transformed_hermitian", r.transformed_hermitian},
              {"negative_witness_vector", vector_json(r.negative_witness_vector)}};
    if (v->blockpos) {
      j["blockpos_min"] = v->blockpos->value;
      j["blockpos_state"] = {{"psi", vector_json(v->blockpos->state.psi)},
                             {"phi", vector_json(v->blockpos->state.phi)}};
    }
    text = j.dump(2);
  });
  if (st != WK_SUCCESS) return st;
  return write_string(text, buf, cap, len);
}

wk_status wk_blockpos_min(wk_matrix w, int restarts, int iters, uint64_t seed, double* value) {
  WK_CHECK_HANDLE(w);
  WK_CHECK_PTR(value);
  return guarded([&] {
    *value = blockpos_min(HermitianOperator(w->m), SeesawOptions{restarts, iters, seed}).value;
  });
}

wk_status wk_detect(wk_matrix w, wk_matrix rho, double tol, int* detected, double* value) {
  WK_CHECK_HANDLE(w);
  WK_CHECK_HANDLE(rho);
  WK_CHECK_PTR(detected);
  WK_CHECK_PTR(value);
  if (!(tol >= 0.0)) return fail(WK_ERR_INVALID_ARGUMENT, "tolerance must be >= 0");
  return guarded([&] {
    const Detection r = detect(HermitianOperator(w->m), HermitianOperator(rho->m), tol);
    *detected = r.detected ? 1 : 0;
    *value = r.value;
  });
}

wk_status wk_sweep_run_csv(const wk_sweep_config* config, const char* csv_path,
                           size_t* rows_written) {
  WK_CHECK_PTR(config);
  WK_CHECK_PTR(config->a_grid);
  WK_CHECK_PTR(config->x_grid);
  WK_CHECK_PTR(csv_path);
  if (!(config->tol >= 0.0)) return fail(WK_ERR_INVALID_ARGUMENT, "tolerance must be >= 0");
  return guarded([&] {
    SweepConfig cfg;
    cfg.d = config->d;
    cfg.a_axes = parse_axis_list(config->a_grid);
    cfg.x_axis = GridAxis::parse(config->x_grid);
    cfg.restarts = config->restarts;
    cfg.iters = config->iters;
    cfg.seed = config->seed;
    cfg.tol = config->tol;
    cfg.parallel = config->parallel != 0;
    const std::vector<SweepRow> rows = run_sweep(cfg);

    std::ofstream out(csv_path);
    if (!out) throw Error(ErrorCode::IoError, std::string("cannot write '") + csv_path + "'");
    write_sweep_csv(rows, out);
    if (!out) throw Error(ErrorCode::IoError, std::string("write to '") + csv_path + "' failed");
    if (rows_written) *rows_written = rows.size();
  });
}

}  // extern "C"
