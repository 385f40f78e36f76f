#include "zetamoments/zm.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include "zetamoments/audit.hpp"
#include "zetamoments/error.hpp"
#include "zetamoments/large_values.hpp"
#include "zetamoments/lemma_audit.hpp"
#include "zetamoments/moments.hpp"
#include "zetamoments/parallel.hpp"
#include "zetamoments/report_json.hpp"
#include "zetamoments/version.hpp"
#include "zetamoments/zero_stats.hpp"
#include "zetamoments/zeros.hpp"
#include "zetamoments/zeta.hpp"

struct zm_cache {
  zm::ZeroCache cache;
};

struct zm_campaign {
  zm::CampaignConfig config;
};

namespace {

thread_local std::string g_last_error;

zm_status status_of(zm::ErrorCode c) { return static_cast<zm_status>(static_cast<int>(c) + 1); }

template <class Fn>
zm_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return ZM_OK;
  } catch (const zm::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ZM_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return ZM_E_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const zm::Json& j, char** json) { *json = dup_string(zm::to_json_string(j)); }

}  // namespace

extern "C" {

const char* zm_last_error_message(void) { return g_last_error.c_str(); }

const char* zm_status_name(zm_status s) {
  if (s == ZM_OK) return "ok";
  if (s == ZM_E_NULL_ARGUMENT) return "null_argument";
  if (s >= ZM_E_DOMAIN && s <= ZM_E_INTERNAL) return zm::error_code_name(static_cast<zm::ErrorCode>(s - 1));
  return "unknown";
}

const char* zm_version(void) { return zm::version_string; }

void zm_set_threads(unsigned n) { zm::set_max_threads(n); }

void zm_string_free(char* s) { std::free(s); }

zm_status zm_zeta(double re, double im, double* out_re, double* out_im, double* abs_error) {
  if (!out_re || !out_im) return ZM_E_NULL_ARGUMENT;
  return guarded([&] {
    auto r = zm::zeta({re, im});
    *out_re = r.value.real();
    *out_im = r.value.imag();
    if (abs_error) *abs_error = r.abs_error;
  });
}

zm_status zm_zeta_prime(double re, double im, double* out_re, double* out_im, double* abs_error) {
  if (!out_re || !out_im) return ZM_E_NULL_ARGUMENT;
  return guarded([&] {
    auto r = zm::zeta_prime({re, im});
    *out_re = r.value.real();
    *out_im = r.value.imag();
    if (abs_error) *abs_error = r.abs_error;
  });
}

zm_status zm_hardy_z(double t, double* out, double* abs_error) {
  if (!out) return ZM_E_NULL_ARGUMENT;
  return guarded([&] {
    auto r = zm::hardy_z(t);
    *out = r.value.real();
    if (abs_error) *abs_error = r.abs_error;
  });
}

zm_status zm_theta(double t, double* out) {
  if (!out) return ZM_E_NULL_ARGUMENT;
  return guarded([&] { *out = zm::theta(t); });
}

zm_status zm_sweep(double t_max, double refine_tol, zm_cache** out) {
  if (!out) return ZM_E_NULL_ARGUMENT;
  *out = nullptr;
  return guarded([&] { *out = new zm_cache{zm::sweep(t_max, refine_tol)}; });
}

zm_status zm_cache_load(const char* path, zm_cache** out) {
  if (!out || !path) return ZM_E_NULL_ARGUMENT;
  *out = nullptr;
  return guarded([&] { *out = new zm_cache{zm::load_cache(path)}; });
}

zm_status zm_cache_save(const zm_cache* c, const char* path) {
  if (!c || !path) return ZM_E_NULL_ARGUMENT;
  return guarded([&] { zm::save_cache(c->cache, path); });
}

void zm_cache_free(zm_cache* c) { delete c; }

size_t zm_cache_size(const zm_cache* c) { return c ? c->cache.size() : 0; }

double zm_cache_t_max(const zm_cache* c) { return c ? c->cache.t_max : 0.0; }

zm_status zm_cache_zero(const zm_cache* c, size_t i, long* index, double* gamma, double* residual) {
  if (!c) return ZM_E_NULL_ARGUMENT;
  return guarded([&] {
    if (i >= c->cache.size()) throw zm::Error(zm::ErrorCode::precondition, "zero index out of range");
    const auto& r = c->cache.records[i];
    if (index) *index = r.index;
    if (gamma) *gamma = r.gamma;
    if (residual) *residual = r.residual;
  });
}

zm_status zm_count_audit_json(const zm_cache* c, char** json) {
  if (!c || !json) return ZM_E_NULL_ARGUMENT;
  return guarded([&] { emit(zm::to_json(zm::count_audit(c->cache)), json); });
}

zm_status zm_moment_json(const zm_cache* c, double k, int ell, char** json) {
  if (!c || !json) return ZM_E_NULL_ARGUMENT;
  return guarded([&] { emit(zm::to_json(zm::compute_Jk(c->cache, k, ell)), json); });
}

zm_status zm_shifted_json(const zm_cache* c, double k, double alpha_re, double alpha_im, char** json) {
  if (!c || !json) return ZM_E_NULL_ARGUMENT;
  return guarded([&] { emit(zm::to_json(zm::shifted_moment(c->cache, k, {alpha_re, alpha_im})), json); });
}

zm_status zm_largeval_json(const zm_cache* c, double k, double alpha_re, double alpha_im, const double* grid, size_t n,
                           char** json) {
  if (!c || !json || (n > 0 && !grid)) return ZM_E_NULL_ARGUMENT;
  return guarded([&] {
    std::vector<double> g(grid, grid + n);
    emit(zm::to_json(zm::large_value_histogram(c->cache, k, {alpha_re, alpha_im}, g)), json);
  });
}

zm_status zm_dyadic_json(const zm_cache* c, double k, double alpha_re, double alpha_im, char** json) {
  if (!c || !json) return ZM_E_NULL_ARGUMENT;
  return guarded([&] {
    zm::ZeroNeighborhoods nb(c->cache);
    zm::Complex a(alpha_re, alpha_im);
    auto h = zm::large_value_histogram(nb, k, a, {});
    auto r = zm::shifted_moment(nb, k, a);
    double recon = zm::dyadic_reconstruction(h, k);
    emit(zm::Json{{"k", k},
                  {"alpha", zm::complex_json(a)},
                  {"direct", r.raw_sum},
                  {"reconstruction", recon},
                  {"upper", std::exp(2.0 * k) * r.raw_sum + std::exp(6.0 * k) * static_cast<double>(h.total)},
                  {"histogram", zm::to_json(h)}},
         json);
  });
}

zm_status zm_cauchy_json(const zm_cache* c, int k, int ell, double R, int n_samples, char** json) {
  if (!c || !json) return ZM_E_NULL_ARGUMENT;
  return guarded([&] { emit(zm::to_json(zm::cauchy_transfer_audit(c->cache, k, ell, R, n_samples)), json); });
}

zm_status zm_gonek_json(const zm_cache* c, double x, char** json) {
  if (!c || !json) return ZM_E_NULL_ARGUMENT;
  return guarded([&] { emit(zm::to_json(zm::gonek_sum(c->cache, x)), json); });
}

zm_status zm_meansquare_json(const zm_cache* c, const double* a_re, const double* a_im, size_t n, double alpha_re,
                             double alpha_im, char** json) {
  if (!c || !json || (n > 0 && !a_re)) return ZM_E_NULL_ARGUMENT;
  return guarded([&] {
    std::vector<zm::Complex> a(n);
    for (size_t i = 0; i < n; ++i) a[i] = {a_re[i], a_im ? a_im[i] : 0.0};
    emit(zm::to_json(zm::mean_square_over_zeros(c->cache, a, {alpha_re, alpha_im})), json);
  });
}

zm_status zm_continuous_json(double k, double t_max, double step, char** json) {
  if (!json) return ZM_E_NULL_ARGUMENT;
  return guarded([&] { emit(zm::to_json(zm::continuous_moment(k, t_max, step)), json); });
}

zm_status zm_lemma21_json(double x, double lambda, int prime_only, double t_lo, double t_hi, size_t n_samples,
                          unsigned long long seed, char** json) {
  if (!json) return ZM_E_NULL_ARGUMENT;
  return guarded([&] {
    zm::DirichletPolySpec spec{x, lambda, prime_only != 0, std::nullopt};
    auto pts = zm::lemma_points(n_samples, t_lo, t_hi, seed);
    auto tab = zm::lemma21_audit(spec, pts);
    zm::Json j = zm::to_json(tab);
    zm::Json rows = zm::Json::array();
    for (const auto& s : tab.samples)
      rows.push_back(zm::Json{{"sigma", s.sigma},
                              {"t", s.t},
                              {"tau", s.tau},
                              {"x", s.x},
                              {"lhs", s.lhs},
                              {"poly_abs", s.poly_abs},
                              {"main_rhs", s.main_rhs},
                              {"slack", s.slack},
                              {"skipped", s.skipped},
                              {"note", s.note}});
    j["samples"] = rows;
    emit(j, json);
  });
}

zm_status zm_campaign_new(double t_max, zm_campaign** out) {
  if (!out) return ZM_E_NULL_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    if (!(t_max > 16.0)) throw zm::Error(zm::ErrorCode::precondition, "campaign: t_max must exceed 16");
    *out = new zm_campaign{zm::default_campaign(t_max)};
  });
}

void zm_campaign_free(zm_campaign* c) { delete c; }

zm_status zm_campaign_set_k_list(zm_campaign* c, const double* k, size_t n) {
  if (!c || (n > 0 && !k)) return ZM_E_NULL_ARGUMENT;
  return guarded([&] { c->config.k_list.assign(k, k + n); });
}

zm_status zm_campaign_set_ell_list(zm_campaign* c, const int* ell, size_t n) {
  if (!c || (n > 0 && !ell)) return ZM_E_NULL_ARGUMENT;
  return guarded([&] { c->config.ell_list.assign(ell, ell + n); });
}

zm_status zm_campaign_set_alpha_list(zm_campaign* c, const double* re, const double* im, size_t n) {
  if (!c || (n > 0 && (!re || !im))) return ZM_E_NULL_ARGUMENT;
  return guarded([&] {
    c->config.alpha_list.clear();
    for (size_t i = 0; i < n; ++i) c->config.alpha_list.emplace_back(re[i], im[i]);
  });
}

zm_status zm_campaign_set_x_policy(zm_campaign* c, zm_x_policy p, double x_explicit) {
  if (!c) return ZM_E_NULL_ARGUMENT;
  return guarded([&] {
    switch (p) {
      case ZM_X_TAU_SQUARED_LOG: c->config.x_policy = zm::XPolicy::tau_squared_log; break;
      case ZM_X_SQRT_T: c->config.x_policy = zm::XPolicy::sqrt_T; break;
      case ZM_X_EXPLICIT: c->config.x_policy = zm::XPolicy::explicit_x; break;
      default: throw zm::Error(zm::ErrorCode::precondition, "unknown x policy");
    }
    c->config.x_explicit = x_explicit;
  });
}

zm_status zm_campaign_set_seed(zm_campaign* c, unsigned long long seed) {
  if (!c) return ZM_E_NULL_ARGUMENT;
  c->config.seed = seed;
  return ZM_OK;
}

zm_status zm_campaign_run_json(const zm_campaign* c, const zm_cache* cache, char** json) {
  if (!c || !json) return ZM_E_NULL_ARGUMENT;
  return guarded([&] {
    zm::validate_campaign(c->config);
    zm::ZeroCache swept;
    const zm::ZeroCache* use = cache ? &cache->cache : nullptr;
    if (!use) {
      swept = zm::sweep(c->config.t_max);
      use = &swept;
    }
    auto outcomes = zm::run_campaign(c->config, use);
    long n = 0;
    for (const auto& r : use->records) n += r.gamma <= c->config.t_max;
    *json = dup_string(zm::campaign_report_string(c->config, outcomes, n));
  });
}

zm_status zm_compare_reports_json(const char* path_a, const char* path_b, char** json) {
  if (!path_a || !path_b || !json) return ZM_E_NULL_ARGUMENT;
  return guarded([&] { emit(zm::to_json(zm::compare_report_files(path_a, path_b)), json); });
}

}  // extern "C"
