#include "zetacert/zetacert.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/errors.hpp"
#include "core/expsum.hpp"
#include "core/numerics.hpp"
#include "core/session.hpp"
#include "core/tyrina.hpp"
#include "core/vinogradov.hpp"
#include "core/zetabounds.hpp"

struct zc_session {
  zc::session::RunConfig cfg;
  zc::session::RunResult result;
  bool has_result = false;
};

namespace {

thread_local std::string g_last_error;

zc_status map_code(zc::ErrorCode c) {
  switch (c) {
    case zc::ErrorCode::invalid_argument: return ZC_ERR_INVALID_ARGUMENT;
    case zc::ErrorCode::domain: return ZC_ERR_DOMAIN;
    case zc::ErrorCode::range: return ZC_ERR_RANGE;
    case zc::ErrorCode::no_admissible_r: return ZC_ERR_NO_ADMISSIBLE_R;
    case zc::ErrorCode::iteration_limit: return ZC_ERR_ITERATION_LIMIT;
    case zc::ErrorCode::infeasible_interval: return ZC_ERR_INFEASIBLE_INTERVAL;
    case zc::ErrorCode::hypothesis_violation: return ZC_ERR_HYPOTHESIS;
    case zc::ErrorCode::precision: return ZC_ERR_PRECISION;
    case zc::ErrorCode::io: return ZC_ERR_IO;
  }
  return ZC_ERR_INTERNAL;
}

zc_status fail(zc_status s, const char* msg) {
  g_last_error = msg;
  return s;
}

template <class F>
zc_status guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return ZC_OK;
  } catch (const zc::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ZC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ZC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ZC_ERR_INTERNAL, "unknown error");
  }
}

#define ZC_NEED(p)                                                     \
  do {                                                                 \
    if (!(p)) return fail(ZC_ERR_INVALID_ARGUMENT, "null pointer: " #p); \
  } while (0)

}  // namespace

extern "C" {

ZC_API const char* zc_version(void) { return "0.1.0"; }

ZC_API const char* zc_status_name(zc_status s) {
  switch (s) {
    case ZC_OK: return "ok";
    case ZC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ZC_ERR_DOMAIN: return "domain error";
    case ZC_ERR_RANGE: return "range error";
    case ZC_ERR_NO_ADMISSIBLE_R: return "no admissible r";
    case ZC_ERR_ITERATION_LIMIT: return "iteration limit";
    case ZC_ERR_INFEASIBLE_INTERVAL: return "infeasible interval";
    case ZC_ERR_HYPOTHESIS: return "hypothesis violation";
    case ZC_ERR_PRECISION: return "precision failure";
    case ZC_ERR_IO: return "i/o error";
    case ZC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

ZC_API const char* zc_last_error(void) { return g_last_error.c_str(); }

ZC_API zc_status zc_lambert_w0(double x, double* out) {
  ZC_NEED(out);
  return guard([&] { *out = zc::numerics::lambert_w0(x); });
}

ZC_API zc_status zc_g_of_y(double y, double* out) {
  ZC_NEED(out);
  return guard([&] { *out = zc::numerics::g_of_y(y); });
}

ZC_API zc_status zc_sup_g(double* y, double* value) {
  ZC_NEED(y);
  ZC_NEED(value);
  return guard([&] {
    auto m = zc::numerics::sup_g();
    *y = m.y;
    *value = m.value;
  });
}

ZC_API zc_status zc_certify_k(int64_t k, int64_t* s, double* rho, double* theta) {
  ZC_NEED(s);
  ZC_NEED(rho);
  ZC_NEED(theta);
  return guard([&] {
    auto r = zc::vinogradov::certify_k(k);
    *s = r.s;
    *rho = r.rho;
    *theta = r.theta;
  });
}

ZC_API zc_status zc_tyrina_x_of_y(int64_t k, double y, double* out) {
  ZC_NEED(out);
  return guard([&] { *out = zc::tyrina::x_of_y(k, y); });
}

ZC_API zc_status zc_tyrina_y_of_x(int64_t k, double x, double* out) {
  ZC_NEED(out);
  return guard([&] { *out = zc::tyrina::y_of_x(k, x); });
}

ZC_API zc_status zc_constant_A(double C, double D, double t0, double* out) {
  ZC_NEED(out);
  return guard([&] { *out = zc::zetabounds::constant_A(C, D, t0); });
}

ZC_API zc_status zc_constant_B(double D, double* out) {
  ZC_NEED(out);
  return guard([&] { *out = zc::zetabounds::constant_B(D); });
}

ZC_API zc_status zc_pnt_constant_d(double c, double* out) {
  ZC_NEED(out);
  return guard([&] { *out = zc::zetabounds::pnt_constant_d(c); });
}

ZC_API zc_status zc_hurwitz_zeta(double sigma, double t, double u, double target, double* re, double* im, double* err) {
  ZC_NEED(re);
  ZC_NEED(im);
  return guard([&] {
    auto z = zc::zetabounds::hurwitz_zeta(sigma, t, u, target);
    *re = z.value.real();
    *im = z.value.imag();
    if (err) *err = z.error;
  });
}

ZC_API zc_status zc_snt_bound(double N, double t, double* out) {
  ZC_NEED(out);
  return guard([&] { *out = zc::expsum::snt_bound(N, t); });
}

ZC_API zc_status zc_snt_bruteforce(int64_t N, double t, int u_grid, double* out) {
  ZC_NEED(out);
  return guard([&] { *out = zc::expsum::snt_bruteforce(N, t, u_grid); });
}

ZC_API zc_status zc_session_create(zc_session** out) {
  ZC_NEED(out);
  *out = nullptr;
  return guard([&] { *out = new zc_session; });
}

ZC_API void zc_session_destroy(zc_session* s) { delete s; }

ZC_API zc_status zc_session_set_k_range(zc_session* s, int64_t lo, int64_t hi) {
  ZC_NEED(s);
  if (lo > hi) return fail(ZC_ERR_INVALID_ARGUMENT, "k range needs lo <= hi");
  s->cfg.k_range = std::pair{lo, hi};
  return ZC_OK;
}

ZC_API zc_status zc_session_set_lambda_range(zc_session* s, double lo, double hi) {
  ZC_NEED(s);
  if (!(lo < hi)) return fail(ZC_ERR_INVALID_ARGUMENT, "lambda range needs lo < hi");
  s->cfg.lambda_range = std::pair{lo, hi};
  return ZC_OK;
}

ZC_API zc_status zc_session_set_mode(zc_session* s, zc_mode mode) {
  ZC_NEED(s);
  switch (mode) {
    case ZC_MODE_ENDPOINTS: s->cfg.sample_mode = zc::vinogradov::SampleMode::endpoints; break;
    case ZC_MODE_GEOMETRIC: s->cfg.sample_mode = zc::vinogradov::SampleMode::geometric; break;
    case ZC_MODE_FULL: s->cfg.sample_mode = zc::vinogradov::SampleMode::full; break;
    default: return fail(ZC_ERR_INVALID_ARGUMENT, "unknown mode");
  }
  return ZC_OK;
}

ZC_API zc_status zc_session_set_threads(zc_session* s, unsigned threads) {
  ZC_NEED(s);
  s->cfg.threads = threads == 0 ? 1 : threads;
  return ZC_OK;
}

ZC_API zc_status zc_session_set_seed(zc_session* s, uint64_t seed) {
  ZC_NEED(s);
  s->cfg.seed = seed;
  return ZC_OK;
}

ZC_API zc_status zc_session_run(zc_session* s, const char* command) {
  ZC_NEED(s);
  ZC_NEED(command);
  auto c = zc::session::parse_command(command);
  if (!c) return fail(ZC_ERR_INVALID_ARGUMENT, (std::string("unknown command: ") + command).c_str());
  s->has_result = false;
  return guard([&] {
    auto cfg = s->cfg;
    cfg.command = *c;
    s->result = zc::session::run(cfg);
    s->has_result = true;
  });
}

ZC_API size_t zc_session_check_count(const zc_session* s) {
  return s && s->has_result ? s->result.report.checks.size() : 0;
}

ZC_API zc_status zc_session_check(const zc_session* s, size_t i, zc_check* out) {
  ZC_NEED(s);
  ZC_NEED(out);
  if (!s->has_result) return fail(ZC_ERR_INVALID_ARGUMENT, "no run yet");
  if (i >= s->result.report.checks.size()) return fail(ZC_ERR_RANGE, "check index out of range");
  const auto& c = s->result.report.checks[i];
  out->name = c.name.c_str();
  out->value = c.value;
  out->bound = c.bound;
  out->margin = c.margin;
  out->passed = c.passed ? 1 : 0;
  return ZC_OK;
}

ZC_API size_t zc_session_failed_count(const zc_session* s) {
  return s && s->has_result ? s->result.report.failed() : 0;
}

ZC_API size_t zc_session_warning_count(const zc_session* s) {
  return s && s->has_result ? s->result.warnings.size() : 0;
}

ZC_API const char* zc_session_warning(const zc_session* s, size_t i) {
  if (!s || !s->has_result || i >= s->result.warnings.size()) return nullptr;
  return s->result.warnings[i].c_str();
}

ZC_API zc_status zc_session_render(const zc_session* s, zc_format format, char** out) {
  ZC_NEED(s);
  ZC_NEED(out);
  *out = nullptr;
  if (!s->has_result) return fail(ZC_ERR_INVALID_ARGUMENT, "no run yet");
  std::string text;
  zc_status st = guard([&] {
    switch (format) {
      case ZC_FORMAT_CSV: text = zc::report::render_csv(s->result.report); break;
      case ZC_FORMAT_JSON: text = zc::report::render_json(s->result.report); break;
      case ZC_FORMAT_MARKDOWN: text = zc::report::render_markdown(s->result.report); break;
      default: zc::raise(zc::ErrorCode::invalid_argument, "unknown format");
    }
  });
  if (st != ZC_OK) return st;
  char* buf = static_cast<char*>(std::malloc(text.size() + 1));
  if (!buf) return fail(ZC_ERR_INTERNAL, "out of memory");
  std::memcpy(buf, text.c_str(), text.size() + 1);
  *out = buf;
  return ZC_OK;
}

ZC_API void zc_free_string(char* p) { std::free(p); }

}  // extern "C"
