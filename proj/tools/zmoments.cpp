// zmoments: command-line front end over the zetamoments C API.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zetamoments/zm.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_validation = 1;
constexpr int exit_computation = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ComputeError : std::runtime_error {
  ComputeError(zm_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  zm_status status;
};

bool is_input_error(zm_status s) {
  switch (s) {
    case ZM_E_DOMAIN:
    case ZM_E_POLE:
    case ZM_E_PRECONDITION:
    case ZM_E_INSUFFICIENT_CACHE:
    case ZM_E_IO:
    case ZM_E_FORMAT:
    case ZM_E_VERSION:
    case ZM_E_CHECKSUM:
    case ZM_E_INVARIANT:
    case ZM_E_EMPTY:
    case ZM_E_SCHEMA:
    case ZM_E_NULL_ARGUMENT: return true;
    default: return false;
  }
}

void check(zm_status s) {
  if (s != ZM_OK) throw ComputeError(s, std::string(zm_status_name(s)) + ": " + zm_last_error_message());
}

// Locale-independent, whole-string decimal parsing.
const CLI::Validator strict_real(
    [](std::string& in) -> std::string {
      double v = 0.0;
      auto [p, ec] = std::from_chars(in.data(), in.data() + in.size(), v);
      if (ec != std::errc() || p != in.data() + in.size() || !std::isfinite(v)) return "not a finite decimal: " + in;
      return {};
    },
    "REAL", "strict_real");

struct CacheHandle {
  zm_cache* p = nullptr;
  ~CacheHandle() { zm_cache_free(p); }
};

struct JsonText {
  char* p = nullptr;
  ~JsonText() { zm_string_free(p); }
  Json parse() const { return Json::parse(p); }
};

void load(CacheHandle& h, const std::string& path) {
  std::cerr << "loading " << path << "\n";
  check(zm_cache_load(path.c_str(), &h.p));
  if (zm_cache_size(h.p) == 0) throw UsageError("empty cache: " + path);
}

std::string num(double v) {
  if (!std::isfinite(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string num(const Json& j) {
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_number()) return num(j.get<double>());
  if (j.is_boolean()) return j.get<bool>() ? "1" : "0";
  if (j.is_string()) return j.get<std::string>();
  return "nan";
}

enum class OutKind { stdout_json, file_json, file_csv };

OutKind out_kind(const std::string& out) {
  if (out.empty()) return OutKind::stdout_json;
  auto ends = [&](const char* suf) {
    std::string s(suf);
    return out.size() >= s.size() && out.compare(out.size() - s.size(), s.size(), s) == 0;
  };
  if (ends(".json")) return OutKind::file_json;
  if (ends(".csv")) return OutKind::file_csv;
  throw UsageError("--out: extension must be .csv or .json");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("--out: cannot open " + path);
  f << text;
  if (!f) throw ComputeError(ZM_E_IO, "--out: write failed for " + path);
  std::cerr << "wrote " << path << "\n";
}

// raw is the library's own JSON text; it is passed through unchanged so
// numbers keep their 17-digit form.
void emit(const std::string& out, const std::string& raw, const std::function<std::string()>& csv) {
  switch (out_kind(out)) {
    case OutKind::stdout_json: std::cout << raw << "\n"; break;
    case OutKind::file_json: write_text(out, raw + "\n"); break;
    case OutKind::file_csv: write_text(out, csv()); break;
  }
}

std::string moment_csv(const Json& r) {
  std::string s = "k,ell,alpha_re,alpha_im,t_max,count,raw_sum,normalized,conjectured_exponent,ratio_to_conjecture\n";
  s += num(r["k"]) + "," + num(r["ell"]) + "," + num(r["alpha"][0]) + "," + num(r["alpha"][1]) + "," + num(r["t_max"]) +
       "," + num(r["count"]) + "," + num(r["raw_sum"]) + "," + num(r["normalized"]) + "," +
       num(r["conjectured_exponent"]) + "," + num(r["ratio_to_conjecture"]) + "\n";
  return s;
}

struct Options {
  double tmax = 0.0;
  double k = 1.0;
  int ell = 1;
  double alpha_re = 0.0;
  double alpha_im = 0.0;
  std::optional<double> x;
  double lambda = 0.5671432904097838;
  double vmin = 3.0;
  std::optional<double> vmax;
  double vstep = 1.0;
  std::string cache;
  std::string out;
  unsigned long long seed = 1;
  double step = 0.01;
  unsigned threads = 0;
  std::vector<double> k_list{1.0, 2.0};
  std::vector<int> ell_list{1, 2};
  std::string x_policy = "tau_squared_log";
  std::vector<std::string> reports;
};

void add_cache_in(CLI::App* c, Options& o) {
  c->add_option("--cache", o.cache, "Zero cache file written by `sweep` (path)")->required()->check(CLI::ExistingFile);
}

void add_out(CLI::App* c, Options& o) {
  c->add_option("--out", o.out, "Output file; .csv or .json by extension (default: JSON on stdout)");
}

void add_alpha(CLI::App* c, Options& o) {
  c->add_option("--alpha-re", o.alpha_re, "Real part of the shift alpha; |Re alpha| <= 1/log T (dimensionless)")
      ->capture_default_str()
      ->check(strict_real);
  c->add_option("--alpha-im", o.alpha_im, "Imaginary part of the shift alpha; |alpha| <= 1 (dimensionless)")
      ->capture_default_str()
      ->check(strict_real);
}

int run_sweep(const Options& o) {
  if (o.cache.empty()) throw UsageError("--cache: output path required");
  std::cerr << "sweeping zeros up to T = " << num(o.tmax) << "\n";
  CacheHandle h;
  check(zm_sweep(o.tmax, 1e-10, &h.p));
  check(zm_cache_save(h.p, o.cache.c_str()));
  Json j{{"t_max", o.tmax}, {"count", zm_cache_size(h.p)}, {"cache", o.cache}};
  std::string raw = j.dump();
  emit(o.out, raw, [&] {
    std::string s = "index,gamma,residual\n";
    for (size_t i = 0; i < zm_cache_size(h.p); ++i) {
      long idx = 0;
      double g = 0.0, r = 0.0;
      check(zm_cache_zero(h.p, i, &idx, &g, &r));
      s += std::to_string(idx) + "," + num(g) + "," + num(r) + "\n";
    }
    return s;
  });
  return exit_ok;
}

int run_moments(const Options& o) {
  CacheHandle h;
  load(h, o.cache);
  JsonText t;
  check(zm_moment_json(h.p, o.k, o.ell, &t.p));
  emit(o.out, t.p, [&] { return moment_csv(t.parse()); });
  return exit_ok;
}

int run_shifted(const Options& o) {
  CacheHandle h;
  load(h, o.cache);
  JsonText t;
  check(zm_shifted_json(h.p, o.k, o.alpha_re, o.alpha_im, &t.p));
  emit(o.out, t.p, [&] { return moment_csv(t.parse()); });
  return exit_ok;
}

int run_largeval(const Options& o) {
  std::vector<double> grid;
  if (o.vmax) {
    if (!(o.vstep > 0.0)) throw UsageError("--vstep: must be positive");
    if (*o.vmax < o.vmin) throw UsageError("--vmax: must be >= --vmin");
    long n = static_cast<long>(std::floor((*o.vmax - o.vmin) / o.vstep + 1e-9)) + 1;
    for (long i = 0; i < n; ++i) grid.push_back(o.vmin + o.vstep * static_cast<double>(i));
  }
  if (!grid.empty() && grid.front() < 3.0) throw UsageError("--vmin: must be >= 3");
  CacheHandle h;
  load(h, o.cache);
  JsonText t;
  check(zm_largeval_json(h.p, o.k, o.alpha_re, o.alpha_im, grid.empty() ? nullptr : grid.data(), grid.size(), &t.p));
  emit(o.out, t.p, [&] {
    Json r = t.parse();
    std::string s = "V,count,bound,case,A,x,z,V1,V2\n";
    const Json& p = r["config"]["params"];
    for (size_t i = 0; i < r["counts"].size(); ++i)
      s += num(p[i]["V"]) + "," + num(r["counts"][i]) + "," + num(r["bound_values"][i]) + "," + num(p[i]["case"]) + "," +
           num(p[i]["A"]) + "," + num(p[i]["x"]) + "," + num(p[i]["z"]) + "," + num(p[i]["V1"]) + "," +
           num(p[i]["V2"]) + "\n";
    return s;
  });
  return exit_ok;
}

int run_gonek(const Options& o) {
  CacheHandle h;
  load(h, o.cache);
  JsonText t;
  check(zm_gonek_json(h.p, o.x.value_or(2.0), &t.p));
  emit(o.out, t.p, [&] {
    Json r = t.parse();
    return "x,t_max,sum_re,sum_im,main_term,error_budget,fitted_constant,zeros_used\n" + num(r["x"]) + "," +
           num(r["t_max"]) + "," + num(r["empirical_sum"][0]) + "," + num(r["empirical_sum"][1]) + "," +
           num(r["main_term"]) + "," + num(r["error_budget"]) + "," + num(r["fitted_constant"]) + "," +
           num(r["zeros_used"]) + "\n";
  });
  return exit_ok;
}

int run_meansquare(const Options& o) {
  double xi = o.x.value_or(20.0);
  if (xi != std::floor(xi) || xi < 3.0) throw UsageError("--x: xi must be an integer >= 3");
  CacheHandle h;
  load(h, o.cache);
  std::vector<double> a(static_cast<size_t>(xi), 1.0);
  JsonText t;
  check(zm_meansquare_json(h.p, a.data(), nullptr, a.size(), o.alpha_re, o.alpha_im, &t.p));
  emit(o.out, t.p, [&] {
    Json r = t.parse();
    return "xi,alpha_re,alpha_im,t_max,lhs,rhs_scale,ratio,zeros_used\n" + num(r["xi"]) + "," + num(r["alpha"][0]) +
           "," + num(r["alpha"][1]) + "," + num(r["t_max"]) + "," + num(r["lhs"]) + "," + num(r["rhs_scale"]) + "," +
           num(r["ratio"]) + "," + num(r["zeros_used"]) + "\n";
  });
  return exit_ok;
}

int run_continuous(const Options& o) {
  JsonText t;
  std::cerr << "integrating up to T = " << num(o.tmax) << "\n";
  check(zm_continuous_json(o.k, o.tmax, o.step, &t.p));
  emit(o.out, t.p, [&] {
    Json r = t.parse();
    return "k,t_max,step,intervals,integral,value\n" + num(r["k"]) + "," + num(r["t_max"]) + "," + num(r["step"]) +
           "," + num(r["intervals"]) + "," + num(r["integral"]) + "," + num(r["value"]) + "\n";
  });
  return exit_ok;
}

struct CampaignHandle {
  zm_campaign* p = nullptr;
  ~CampaignHandle() { zm_campaign_free(p); }
};

int run_audit(const Options& o, bool alpha_given, bool x_given) {
  CampaignHandle c;
  check(zm_campaign_new(o.tmax, &c.p));
  check(zm_campaign_set_k_list(c.p, o.k_list.data(), o.k_list.size()));
  check(zm_campaign_set_ell_list(c.p, o.ell_list.data(), o.ell_list.size()));
  if (alpha_given) check(zm_campaign_set_alpha_list(c.p, &o.alpha_re, &o.alpha_im, 1));
  zm_x_policy p = ZM_X_TAU_SQUARED_LOG;
  if (o.x_policy == "sqrt_T") p = ZM_X_SQRT_T;
  if (o.x_policy == "explicit" || x_given) p = ZM_X_EXPLICIT;
  if (p == ZM_X_EXPLICIT && !x_given) throw UsageError("--x: required with --x-policy explicit");
  check(zm_campaign_set_x_policy(c.p, p, o.x.value_or(0.0)));
  check(zm_campaign_set_seed(c.p, o.seed));
  CacheHandle h;
  if (!o.cache.empty()) load(h, o.cache);
  std::cerr << "running audit campaign at T = " << num(o.tmax) << "\n";
  JsonText t;
  check(zm_campaign_run_json(c.p, h.p, &t.p));
  std::string raw = t.p;
  if (!raw.empty() && raw.back() == '\n') raw.pop_back();
  emit(o.out, raw, [&] {
    Json r = t.parse();
    std::string s = "audit_name,fitted_constant,max_violation,sample_count,notes\n";
    for (const auto& x : r["outcomes"]) {
      std::string notes = x["notes"].get<std::string>();
      for (char& ch : notes)
        if (ch == ',' || ch == '\n') ch = ';';
      s += "\"" + x["audit_name"].get<std::string>() + "\"," + num(x["fitted_constant"]) + "," +
           num(x["max_violation"]) + "," + num(x["sample_count"]) + "," + notes + "\n";
    }
    return s;
  });
  return exit_ok;
}

int run_diff(const Options& o) {
  JsonText t;
  check(zm_compare_reports_json(o.reports[0].c_str(), o.reports[1].c_str(), &t.p));
  emit(o.out, t.p, [&] {
    Json r = t.parse();
    std::string s = "audit_name,field,a,b,rel_diff,drift\n";
    for (const auto& e : r["entries"])
      s += "\"" + e["audit_name"].get<std::string>() + "\"," + e["field"].get<std::string>() + "," + num(e["a"]) + "," +
           num(e["b"]) + "," + num(e["rel_diff"]) + "," + num(e["drift"]) + "\n";
    return s;
  });
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zmoments: zeros, moments and audits of the Riemann zeta function"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "Worker thread cap (0 = all available cores)")->capture_default_str();
  app.set_version_flag("--version", std::string(zm_version()));

  auto* sweep = app.add_subcommand("sweep", "Locate zeros 0 < gamma <= T and write a zero cache");
  sweep->add_option("--tmax", o.tmax, "Height T (dimensionless ordinate), 0 < T <= 1e5")->required()->check(strict_real);
  sweep->add_option("--cache", o.cache, "Cache file to write (path)")->required();
  add_out(sweep, o);
  sweep->footer("JSON: {t_max, count, cache}. CSV columns: index,gamma,residual");

  auto* moments = app.add_subcommand("moments", "Discrete moment sum |zeta^(ell)(rho)|^(2k) over cached zeros");
  add_cache_in(moments, o);
  moments->add_option("--k", o.k, "Moment parameter k > 0 (dimensionless)")->capture_default_str()->check(strict_real);
  moments->add_option("--ell", o.ell, "Derivative order ell in {0, 1, 2}")->capture_default_str()->check(CLI::Range(0, 2));
  add_out(moments, o);
  moments->footer(
      "CSV columns: k,ell,alpha_re,alpha_im,t_max,count,raw_sum,normalized,conjectured_exponent,ratio_to_conjecture");

  auto* shifted = app.add_subcommand("shifted", "Shifted moment sum |zeta(rho + alpha)|^(2k) over cached zeros");
  add_cache_in(shifted, o);
  shifted->add_option("--k", o.k, "Moment parameter k > 0 (dimensionless)")->capture_default_str()->check(strict_real);
  add_alpha(shifted, o);
  add_out(shifted, o);
  shifted->footer(
      "CSV columns: k,ell,alpha_re,alpha_im,t_max,count,raw_sum,normalized,conjectured_exponent,ratio_to_conjecture");

  auto* largeval = app.add_subcommand("largeval", "Histogram of log|zeta(rho + alpha)| >= V with the lemma bounds");
  add_cache_in(largeval, o);
  largeval->add_option("--k", o.k, "Moment parameter k recorded with the histogram")->capture_default_str()->check(strict_real);
  add_alpha(largeval, o);
  largeval->add_option("--vmin", o.vmin, "First level V >= 3 (natural log units)")->capture_default_str()->check(strict_real);
  largeval->add_option("--vmax", o.vmax, "Last level V (default: integer grid up to the observed maximum)")
      ->check(strict_real);
  largeval->add_option("--vstep", o.vstep, "Level spacing (natural log units)")->capture_default_str()->check(strict_real);
  add_out(largeval, o);
  largeval->footer("CSV columns: V,count,bound,case,A,x,z,V1,V2");

  auto* gonek = app.add_subcommand("gonek", "Explicit-formula sum of x^rho over cached zeros");
  add_cache_in(gonek, o);
  gonek->add_option("--x", o.x, "Base x > 1 (dimensionless, default 2)")->check(strict_real);
  add_out(gonek, o);
  gonek->footer("CSV columns: x,t_max,sum_re,sum_im,main_term,error_budget,fitted_constant,zeros_used");

  auto* meansquare = app.add_subcommand("meansquare", "Mean square of sum_{n<=xi} n^(-rho-alpha) over cached zeros");
  add_cache_in(meansquare, o);
  meansquare->add_option("--x", o.x, "Length xi of the coefficient sequence a_n = 1 (integer >= 3, default 20)")
      ->check(strict_real);
  add_alpha(meansquare, o);
  add_out(meansquare, o);
  meansquare->footer("CSV columns: xi,alpha_re,alpha_im,t_max,lhs,rhs_scale,ratio,zeros_used");

  bool alpha_given = false, x_given = false;
  auto* audit = app.add_subcommand("audit", "Run the full audit campaign and emit an audit.v1 JSON report");
  audit->add_option("--tmax", o.tmax, "Campaign height T, 16 < T <= 1e5")->required()->check(strict_real);
  auto* ak = audit->add_option("--k", o.k_list, "Moment parameters k (default: 1 2; a bare --k skips the moment audits)")
      ->expected(0, -1);
  auto* al = audit->add_option("--ell", o.ell_list, "Derivative orders in {0, 1, 2} (default: 1 2)")->expected(0, -1);
  auto* are = audit->add_option("--alpha-re", o.alpha_re, "Real part of a single shift (default: +-1/log T and i/log T)")
                  ->check(strict_real);
  auto* aim = audit->add_option("--alpha-im", o.alpha_im, "Imaginary part of a single shift")->check(strict_real);
  auto* ax = audit->add_option("--x", o.x, "Explicit x for the majorant audits (selects --x-policy explicit)")
                 ->check(strict_real);
  audit->add_option("--x-policy", o.x_policy, "x policy: tau_squared_log, sqrt_T or explicit")
      ->capture_default_str()
      ->check(CLI::IsMember({"tau_squared_log", "sqrt_T", "explicit"}));
  audit->add_option("--seed", o.seed, "Seed of the low-discrepancy sample points")->capture_default_str();
  audit->add_option("--cache", o.cache, "Reuse an existing zero cache covering T (path)")->check(CLI::ExistingFile);
  add_out(audit, o);
  audit->footer("CSV columns: audit_name,fitted_constant,max_violation,sample_count,notes");

  auto* continuous = app.add_subcommand("continuous", "(1/T) int_1^T |zeta(1/2+it)|^(2k) dt by composite Simpson");
  continuous->add_option("--k", o.k, "Moment parameter k > 0 (dimensionless)")->capture_default_str()->check(strict_real);
  continuous->add_option("--tmax", o.tmax, "Upper limit T, 1 < T <= 1e5")->required()->check(strict_real);
  continuous->add_option("--step", o.step, "Quadrature step in t, <= 0.01")->capture_default_str()->check(strict_real);
  add_out(continuous, o);
  continuous->footer("CSV columns: k,t_max,step,intervals,integral,value");

  auto* diff = app.add_subcommand("diff", "Compare two audit.v1 reports field by field");
  diff->add_option("reports", o.reports, "Two report files (paths)")->required()->expected(2)->check(CLI::ExistingFile);
  add_out(diff, o);
  diff->footer("CSV columns: audit_name,field,a,b,rel_diff,drift");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_validation;
  }
  alpha_given = are->count() + aim->count() > 0;
  x_given = ax->count() > 0;
  auto bare = [](const CLI::Option* opt) {
    const auto& r = opt->results();
    return opt->count() > 0 && (r.empty() || (r.size() == 1 && r[0].empty()));
  };
  if (bare(ak)) o.k_list.clear();
  if (bare(al)) o.ell_list.clear();

  zm_set_threads(o.threads);
  try {
    out_kind(o.out);
    if (sweep->parsed()) return run_sweep(o);
    if (moments->parsed()) return run_moments(o);
    if (shifted->parsed()) return run_shifted(o);
    if (largeval->parsed()) return run_largeval(o);
    if (gonek->parsed()) return run_gonek(o);
    if (meansquare->parsed()) return run_meansquare(o);
    if (audit->parsed()) return run_audit(o, alpha_given, x_given);
    if (continuous->parsed()) return run_continuous(o);
    if (diff->parsed()) return run_diff(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_validation;
  } catch (const ComputeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.status) ? exit_validation : exit_computation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_computation;
  }
  return exit_validation;
}
