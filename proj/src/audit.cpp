#include "zetamoments/audit.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "zetamoments/constants.hpp"
#include "zetamoments/error.hpp"
#include "zetamoments/large_values.hpp"
#include "zetamoments/moments.hpp"
#include "zetamoments/parallel.hpp"
#include "zetamoments/report_json.hpp"
#include "zetamoments/version.hpp"
#include "zetamoments/zero_stats.hpp"
#include "zetamoments/zeta.hpp"

namespace zm {

namespace {

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string alpha_label(Complex a, double T) {
  double L = 1.0 / std::log(T);
  auto same = [](double x, double y) { return std::fabs(x - y) <= 1e-12 * std::max(1.0, std::fabs(y)); };
  if (a == Complex(0.0, 0.0)) return "0";
  if (a.imag() == 0.0 && same(a.real(), L)) return "+1/logT";
  if (a.imag() == 0.0 && same(a.real(), -L)) return "-1/logT";
  if (a.real() == 0.0 && same(a.imag(), L)) return "i/logT";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", a.real(), a.imag());
  return buf;
}

double positive(double v) { return v > 0.0 ? v : 0.0; }

ZeroCache truncate_cache(const ZeroCache& c, double T) {
  if (c.t_max < T) fail(ErrorCode::insufficient_cache, "campaign: cache t_max below the campaign height");
  ZeroCache out;
  out.t_max = T;
  out.meta = c.meta;
  for (const auto& r : c.records)
    if (r.gamma <= T) out.records.push_back(r);
  return out;
}

struct Task {
  std::string name;
  std::function<void(AuditOutcome&)> run;
};

}  // namespace

CampaignConfig default_campaign(double t_max) {
  CampaignConfig c;
  c.t_max = t_max;
  c.k_list = {1.0, 2.0};
  c.ell_list = {1, 2};
  double L = 1.0 / std::log(t_max);
  c.alpha_list = {Complex(L, 0.0), Complex(-L, 0.0), Complex(0.0, L)};
  return c;
}

void validate_campaign(const CampaignConfig& c) {
  if (!(c.t_max > 16.0) || c.t_max > 1e5) fail(ErrorCode::precondition, "campaign: t_max must be in (16, 1e5]");
  for (double k : c.k_list)
    if (!(k > 0.0) || !std::isfinite(k)) fail(ErrorCode::precondition, "campaign: k_list entries must be positive");
  for (int l : c.ell_list)
    if (l < 0 || l > 2) fail(ErrorCode::precondition, "campaign: ell_list entries must be 0, 1 or 2");
  for (Complex a : c.alpha_list)
    if (!admissible_shift(a, c.t_max))
      fail(ErrorCode::precondition, "campaign: alpha " + alpha_label(a, c.t_max) + " outside the admissible shifts");
  if (c.x_policy == XPolicy::explicit_x && !(c.x_explicit >= 2.0))
    fail(ErrorCode::precondition, "campaign: explicit x must be >= 2");
  if (c.lemma_samples < 1) fail(ErrorCode::precondition, "campaign: lemma_samples must be >= 1");
  if (c.cauchy_samples < 64) fail(ErrorCode::precondition, "campaign: cauchy_samples must be >= 64");
  if (!(c.continuous_step > 0.0) || c.continuous_step > 0.01)
    fail(ErrorCode::precondition, "campaign: continuous_step must be in (0, 0.01]");
}

std::vector<AuditOutcome> run_campaign(const CampaignConfig& cfg, const ZeroCache* given) {
  validate_campaign(cfg);
  const double T = cfg.t_max;
  const double logT = std::log(T);
  ZeroCache cache = given ? truncate_cache(*given, T) : sweep(T);

  std::vector<Task> tasks;

  tasks.push_back({"count_audit", [&](AuditOutcome& o) {
                     CountAudit a = count_audit(cache);
                     o.fitted_constant = std::fabs(a.deviation_theta);
                     o.max_violation = positive(std::fabs(a.deviation_theta) - 2.0);
                     o.sample_count = a.n_found;
                     o.metrics = to_json(a);
                   }});

  const std::vector<std::pair<std::string, double>> gonek_x = {
      {"2", 2.0}, {"2.5", 2.5}, {"e", std::exp(1.0)}, {"3", 3.0}, {"4", 4.0}, {"5", 5.0}, {"6", 6.0}};
  for (const auto& [label, x] : gonek_x) {
    tasks.push_back({"gonek[x=" + label + "]", [&, x](AuditOutcome& o) {
                       GonekReport r = gonek_sum(cache, x);
                       o.fitted_constant = r.fitted_constant;
                       o.max_violation = positive(r.fitted_constant - 1.0);
                       o.sample_count = r.zeros_used;
                       o.metrics = to_json(r);
                     }});
  }

  if (!cfg.k_list.empty()) {
    for (double xi : {20.0, 50.0, 100.0}) {
      for (Complex a : {Complex(0.0, 0.0), Complex(1.0 / logT, 0.0)}) {
        tasks.push_back({"mean_square[xi=" + fmt_g(xi) + ",alpha=" + alpha_label(a, T) + "]", [&, xi, a](AuditOutcome& o) {
                           std::vector<Complex> coeffs(static_cast<std::size_t>(xi), Complex(1.0, 0.0));
                           MeanSquareReport r = mean_square_over_zeros(cache, coeffs, a);
                           o.fitted_constant = r.ratio;
                           o.max_violation = positive(r.ratio - 1.0);
                           o.sample_count = r.zeros_used;
                           o.metrics = to_json(r);
                         }});
      }
    }

    tasks.push_back({"partial_fraction", [&](AuditOutcome& o) {
                       const double lo = 60.0, hi = T - default_f_window - 10.0;
                       if (!(hi > lo)) fail(ErrorCode::insufficient_cache, "partial_fraction: t_max too small for the F window");
                       auto pts = lemma_points(static_cast<std::size_t>(cfg.lemma_samples), lo, hi, cfg.seed);
                       double worst = 0.0, worst_t = 0.0, worst_sigma = 0.0, min_f = INFINITY;
                       for (const auto& p : pts) {
                         double sigma = 0.5 + 0.5 * (0.02 + 0.98 * p.u);
                         Complex s(sigma, p.t);
                         double F = f_sum(cache, s).total;
                         double lhs = -log_deriv(s).value.real();
                         double d = std::fabs(lhs - (0.5 * std::log(p.t + 3.0) - F));
                         if (d > worst) {
                           worst = d;
                           worst_t = p.t;
                           worst_sigma = sigma;
                         }
                         min_f = std::min(min_f, F);
                       }
                       o.fitted_constant = worst;
                       o.max_violation = positive(-min_f);
                       o.sample_count = static_cast<long>(pts.size());
                       o.metrics = Json{{"argmax_t", worst_t}, {"argmax_sigma", worst_sigma}, {"min_F", min_f}};
                     }});

    tasks.push_back({"stirling_digamma", [&](AuditOutcome& o) {
                       auto pts = lemma_points(static_cast<std::size_t>(cfg.lemma_samples), 1.0, T, cfg.seed);
                       double worst = 0.0, worst_t = 0.0;
                       for (const auto& p : pts) {
                         Complex s(0.25 + 0.5 * p.u + 1.0, 0.5 * p.t);
                         double d = std::abs(digamma(s) - (std::log(s) - 0.5 / s)) * std::norm(s);
                         if (d > worst) {
                           worst = d;
                           worst_t = p.t;
                         }
                       }
                       o.fitted_constant = worst;
                       o.max_violation = positive(worst - 1.0);
                       o.sample_count = static_cast<long>(pts.size());
                       o.metrics = Json{{"argmax_t", worst_t}};
                     }});

    tasks.push_back({"chi_modulus", [&](AuditOutcome& o) {
                       auto pts = lemma_points(static_cast<std::size_t>(cfg.lemma_samples), 1.0, T, cfg.seed);
                       double worst = 0.0, worst_t = 0.0, worst_sigma = 0.0;
                       for (const auto& p : pts) {
                         double sigma = -1.0 + 3.0 * p.u;
                         double m = std::abs(chi(Complex(sigma, p.t)).value);
                         double scale = std::pow(p.t / Constants::two_pi, 0.5 - sigma);
                         double d = std::fabs(m / scale - 1.0) * p.t;
                         if (d > worst) {
                           worst = d;
                           worst_t = p.t;
                           worst_sigma = sigma;
                         }
                       }
                       o.fitted_constant = worst;
                       o.max_violation = positive(worst - 1.0);
                       o.sample_count = static_cast<long>(pts.size());
                       o.metrics = Json{{"argmax_t", worst_t}, {"argmax_sigma", worst_sigma}};
                     }});

    for (LemmaVariant v : {LemmaVariant::lambda_weighted, LemmaVariant::prime_only}) {
      tasks.push_back({std::string("lemma21[") + lemma_variant_name(v) + "]", [&, v](AuditOutcome& o) {
                         auto pts = lemma_points(static_cast<std::size_t>(cfg.lemma_samples), std::max(20.0, T / 10.0), T,
                                                 cfg.seed);
                         LemmaAuditOptions opt;
                         opt.variant = v;
                         opt.policy = cfg.x_policy;
                         opt.x_explicit = cfg.x_explicit;
                         opt.T = T;
                         LemmaAuditTable tab = lemma21_audit(opt, pts);
                         o.fitted_constant = tab.fitted_constant;
                         o.max_violation = positive(tab.fitted_constant - 1.0);
                         o.sample_count = tab.used;
                         if (tab.skipped) o.notes = std::to_string(tab.skipped) + " samples skipped (preconditions)";
                         o.metrics = to_json(tab);
                         o.metrics["x_policy"] = x_policy_name(cfg.x_policy);
                       }});
    }

    tasks.push_back({"lemma31_difference", [&](AuditOutcome& o) {
                       auto pts = lemma_points(static_cast<std::size_t>(cfg.lemma_samples), std::max(20.0, T / 10.0), T,
                                               cfg.seed);
                       DifferenceAudit d = lemma31_difference(cfg.x_policy, cfg.x_explicit, Constants::lambda0, T, pts);
                       o.fitted_constant = d.fitted_constant;
                       o.max_violation = positive(d.fitted_constant - 1.0);
                       o.sample_count = d.used;
                       o.metrics = to_json(d);
                     }});

    tasks.push_back({"vd_prefactor", [&](AuditOutcome& o) {
                       double p = (1.0 + Constants::lambda0) / 4.0;
                       o.fitted_constant = p;
                       o.max_violation = positive(p - 0.4) + positive(Constants::lambda0 - 0.6);
                       o.sample_count = 1;
                       o.metrics = Json{{"lambda0", Constants::lambda0}, {"prefactor", p}, {"limit", 0.4}};
                     }});
  }

  ZeroNeighborhoods nb;
  std::string nb_error;
  if (!cfg.k_list.empty() && !cache.empty()) {
    try {
      nb = ZeroNeighborhoods(cache);
    } catch (const std::exception& e) {
      nb_error = e.what();
    }
  }
  auto need_nb = [&] {
    if (cache.empty()) fail(ErrorCode::empty, "empty cache");
    if (!nb_error.empty()) fail(ErrorCode::evaluation, "local expansions: " + nb_error);
  };

  for (double k : cfg.k_list) {
    const std::string ks = "k=" + fmt_g(k);
    tasks.push_back({"continuous_moment[" + ks + "]", [&, k](AuditOutcome& o) {
                       ContinuousMomentReport r = continuous_moment(k, T, cfg.continuous_step);
                       o.fitted_constant = r.value / std::pow(logT, k * k);
                       o.sample_count = r.intervals;
                       o.metrics = to_json(r);
                     }});
    for (int ell : cfg.ell_list) {
      const std::string tag = ks + ",ell=" + std::to_string(ell);
      tasks.push_back({"jk[" + tag + "]", [&, k, ell](AuditOutcome& o) {
                         need_nb();
                         MomentReport r = compute_Jk(nb, k, ell);
                         o.fitted_constant = r.ratio_to_conjecture;
                         o.sample_count = r.count;
                         o.metrics = to_json(r);
                         if (k == 1.0 && ell == 1)
                           o.metrics["ratio_to_j1_asymptotic"] = r.normalized / (std::pow(logT, 3) / 12.0);
                         if (r.vanishing_terms) o.notes = std::to_string(r.vanishing_terms) + " terms vanish within residual";
                       }});
      if (ell >= 1 && k == std::floor(k)) {
        tasks.push_back({"cauchy[" + tag + "]", [&, k, ell](AuditOutcome& o) {
                           need_nb();
                           CauchyTransferReport r =
                               cauchy_transfer_audit(nb, static_cast<int>(k), ell, 1.0 / logT, cfg.cauchy_samples);
                           o.fitted_constant = r.slack;
                           o.max_violation = positive((1.0 - cauchy_sampling_tolerance) - r.slack);
                           o.sample_count = r.alphas_sampled;
                           o.metrics = to_json(r);
                         }});
      }
    }
    for (Complex a : cfg.alpha_list) {
      const std::string tag = ks + ",alpha=" + alpha_label(a, T);
      tasks.push_back({"shifted[" + tag + "]", [&, k, a](AuditOutcome& o) {
                         need_nb();
                         MomentReport r = shifted_moment(nb, k, a);
                         o.fitted_constant = r.ratio_to_conjecture;
                         o.sample_count = r.count;
                         o.metrics = to_json(r);
                       }});
      tasks.push_back({"reflection[" + tag + "]", [&, k, a](AuditOutcome& o) {
                         need_nb();
                         Complex b = -std::conj(a);
                         MomentReport ra = shifted_moment(nb, k, a);
                         MomentReport rb = shifted_moment(nb, k, b);
                         double C = 0.0;
                         for (const auto& z : nb.cache().records)
                           C = std::max(C, std::abs(chi(Complex(0.5, z.gamma) + a).value));
                         double ratio = rb.raw_sum > 0.0 ? ra.raw_sum / rb.raw_sum : 0.0;
                         double limit = std::pow(C, 2.0 * k);
                         o.fitted_constant = ratio;
                         o.max_violation = positive(ratio / limit - 1.0);
                         o.sample_count = ra.count;
                         o.metrics = Json{{"sum_alpha", ra.raw_sum}, {"sum_reflected", rb.raw_sum}, {"chi_max", C},
                                          {"limit", limit}};
                       }});
      tasks.push_back({"largeval[" + tag + "]", [&, k, a](AuditOutcome& o) {
                         need_nb();
                         LargeValueHistogram h = large_value_histogram(nb, k, a, {});
                         long bad = 0;
                         double worst = 0.0;
                         for (std::size_t i = 0; i < h.counts.size(); ++i) {
                           if (i > 0 && h.counts[i] > h.counts[i - 1]) ++bad;
                           if (h.config.V_grid[i] > h.config.vacuity_threshold && h.counts[i] > 0) ++bad;
                           if (h.config.params[i].vd_case != VdCase::below_range && h.bound_values[i] > 0.0)
                             worst = std::max(worst, h.counts[i] / h.bound_values[i]);
                         }
                         o.fitted_constant = worst;
                         o.max_violation = static_cast<double>(bad);
                         o.sample_count = h.total;
                         o.metrics = to_json(h);
                       }});
      tasks.push_back({"dyadic[" + tag + "]", [&, k, a](AuditOutcome& o) {
                         need_nb();
                         LargeValueHistogram h = large_value_histogram(nb, k, a, {});
                         MomentReport r = shifted_moment(nb, k, a);
                         double recon = dyadic_reconstruction(h, k);
                         double upper = std::exp(2.0 * k) * r.raw_sum + std::exp(6.0 * k) * static_cast<double>(h.total);
                         o.fitted_constant = r.raw_sum > 0.0 ? recon / r.raw_sum : 0.0;
                         o.max_violation = positive((r.raw_sum - recon) / std::max(r.raw_sum, 1e-300)) +
                                           positive((recon - upper) / std::max(recon, 1e-300));
                         o.sample_count = h.total;
                         o.metrics = Json{{"direct", r.raw_sum}, {"reconstruction", recon}, {"upper", upper}};
                       }});
    }
  }

  std::vector<AuditOutcome> out(tasks.size());
  parallel_for(
      tasks.size(),
      [&](std::size_t i) {
        AuditOutcome& o = out[i];
        o.audit_name = tasks[i].name;
        try {
          tasks[i].run(o);
        } catch (const Error& e) {
          o.fitted_constant = NAN;
          o.max_violation = 0.0;
          o.notes = std::string("error[") + error_code_name(e.code()) + "]: " + e.what();
        } catch (const std::exception& e) {
          o.fitted_constant = NAN;
          o.max_violation = 0.0;
          o.notes = std::string("error[internal]: ") + e.what();
        }
      },
      1);
  return out;
}

Json campaign_report(const CampaignConfig& c, const std::vector<AuditOutcome>& outcomes, long zeros_used) {
  Json alphas = Json::array();
  for (Complex a : c.alpha_list) alphas.push_back(complex_json(a));
  Json campaign{{"t_max", c.t_max},
                {"k_list", c.k_list},
                {"ell_list", c.ell_list},
                {"alpha_list", alphas},
                {"x_policy", x_policy_name(c.x_policy)},
                {"x_explicit", c.x_explicit},
                {"seed", c.seed},
                {"lemma_samples", c.lemma_samples},
                {"cauchy_samples", c.cauchy_samples},
                {"continuous_step", c.continuous_step},
                {"zeros_used", zeros_used},
                {"tool_version", version_string},
                {"flags",
                 Json::array({"shift range implemented as |Re alpha| <= 1/log T; the theorem statement reads "
                              "0 <= Re alpha - 1/2 <= 1/log T"})}};
  Json list = Json::array();
  for (const auto& o : outcomes) {
    list.push_back(Json{{"audit_name", o.audit_name},
                        {"fitted_constant", o.fitted_constant},
                        {"max_violation", o.max_violation},
                        {"sample_count", o.sample_count},
                        {"notes", o.notes},
                        {"metrics", o.metrics}});
  }
  return Json{{"schema", "audit.v1"}, {"campaign", campaign}, {"outcomes", list}};
}

std::string campaign_report_string(const CampaignConfig& c, const std::vector<AuditOutcome>& outcomes,
                                   long zeros_used) {
  return to_json_string(campaign_report(c, outcomes, zeros_used)) + "\n";
}

namespace {

void schema_check(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::schema, "report schema: " + what);
}

bool is_number_or_null(const Json& j) { return j.is_number() || j.is_null(); }

void flatten(const Json& j, const std::string& path, std::map<std::string, const Json*>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path + "." + it.key(), out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out[path] = &j;
  }
}

double rel_diff(const Json& a, const Json& b) {
  if (a.is_number() && b.is_number()) {
    double x = a.get<double>(), y = b.get<double>();
    if (x == y) return 0.0;
    double s = std::max(std::fabs(x), std::fabs(y));
    return std::fabs(x - y) / s;
  }
  return a == b ? 0.0 : INFINITY;
}

double as_double(const Json& j) { return j.is_number() ? j.get<double>() : NAN; }

}  // namespace

Json parse_report(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorCode::schema, std::string("report schema: not valid JSON (") + e.what() + ")");
  }
  schema_check(j.is_object(), "top level must be an object");
  schema_check(j.contains("schema") && j["schema"].is_string(), "missing schema tag");
  schema_check(j["schema"] == "audit.v1", "unsupported schema " + j["schema"].get<std::string>());
  schema_check(j.contains("campaign") && j["campaign"].is_object(), "missing campaign");
  schema_check(j["campaign"].contains("t_max") && j["campaign"]["t_max"].is_number(), "campaign.t_max");
  schema_check(j.contains("outcomes") && j["outcomes"].is_array(), "missing outcomes");
  for (const auto& o : j["outcomes"]) {
    schema_check(o.is_object(), "outcome must be an object");
    schema_check(o.contains("audit_name") && o["audit_name"].is_string(), "outcome.audit_name");
    schema_check(o.contains("fitted_constant") && is_number_or_null(o["fitted_constant"]), "outcome.fitted_constant");
    schema_check(o.contains("max_violation") && is_number_or_null(o["max_violation"]), "outcome.max_violation");
    schema_check(o.contains("sample_count") && o["sample_count"].is_number_integer(), "outcome.sample_count");
    schema_check(o.contains("notes") && o["notes"].is_string(), "outcome.notes");
    schema_check(o.contains("metrics") && o["metrics"].is_object(), "outcome.metrics");
  }
  return j;
}

ReportDiff compare_reports(const std::string& text_a, const std::string& text_b) {
  Json a = parse_report(text_a), b = parse_report(text_b);
  std::map<std::string, const Json*> ma, mb;
  for (const auto& o : a["outcomes"]) ma[o["audit_name"].get<std::string>()] = &o;
  for (const auto& o : b["outcomes"]) mb[o["audit_name"].get<std::string>()] = &o;
  ReportDiff d;
  const double ta = a["campaign"]["t_max"].get<double>(), tb = b["campaign"]["t_max"].get<double>();
  for (const auto& [name, oa] : ma) {
    auto it = mb.find(name);
    if (it == mb.end()) {
      d.only_in_a.push_back(name);
      continue;
    }
    const Json* ob = it->second;
    std::map<std::string, const Json*> fa, fb;
    for (const char* f : {"fitted_constant", "max_violation", "sample_count", "notes"}) {
      fa[f] = &(*oa)[f];
      fb[f] = &(*ob)[f];
    }
    flatten((*oa)["metrics"], "metrics", fa);
    flatten((*ob)["metrics"], "metrics", fb);
    for (const auto& [field, va] : fa) {
      auto jt = fb.find(field);
      const Json& vb = jt == fb.end() ? Json() : *jt->second;
      double r = rel_diff(*va, vb);
      if (r > 0.0) d.entries.push_back({name, field, as_double(*va), as_double(vb), r, r > report_drift_tolerance});
    }
    for (const auto& [field, vb] : fb)
      if (!fa.count(field)) d.entries.push_back({name, field, NAN, as_double(*vb), INFINITY, true});
    if (ta != tb && name.rfind("jk[", 0) == 0) {
      GrowthRow g{name, ta, tb, as_double((*oa)["fitted_constant"]), as_double((*ob)["fitted_constant"]), NAN};
      if (g.ratio_a > 0.0 && g.ratio_b > 0.0 && ta > 1.0 && tb > 1.0)
        g.exponent = std::log(g.ratio_b / g.ratio_a) / std::log(std::log(tb) / std::log(ta));
      d.growth.push_back(g);
    }
  }
  for (const auto& [name, ob] : mb)
    if (!ma.count(name)) d.only_in_b.push_back(name);
  return d;
}

ReportDiff compare_report_files(const std::string& path_a, const std::string& path_b) {
  auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) fail(ErrorCode::io, "cannot open " + p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  return compare_reports(slurp(path_a), slurp(path_b));
}

Json to_json(const ReportDiff& d) {
  Json entries = Json::array();
  long drift = 0;
  for (const auto& e : d.entries) {
    drift += e.drift;
    entries.push_back(Json{{"audit_name", e.audit_name},
                           {"field", e.field},
                           {"a", e.a},
                           {"b", e.b},
                           {"rel_diff", e.rel_diff},
                           {"drift", e.drift}});
  }
  Json growth = Json::array();
  for (const auto& g : d.growth)
    growth.push_back(Json{{"audit_name", g.audit_name},
                          {"t_a", g.t_a},
                          {"t_b", g.t_b},
                          {"ratio_a", g.ratio_a},
                          {"ratio_b", g.ratio_b},
                          {"exponent", g.exponent}});
  return Json{{"identical", d.empty()},
              {"drift_count", drift},
              {"entries", entries},
              {"only_in_a", d.only_in_a},
              {"only_in_b", d.only_in_b},
              {"growth", growth}};
}

}  // namespace zm
