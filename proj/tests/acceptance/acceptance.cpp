// Acceptance checks: one PASS/FAIL line per criterion. Tolerances are fixed
// here; the exit status is the number of failing criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "../support/oracle.hpp"
#include "zetamoments/audit.hpp"
#include "zetamoments/large_values.hpp"
#include "zetamoments/lemma_audit.hpp"
#include "zetamoments/moments.hpp"
#include "zetamoments/parallel.hpp"
#include "zetamoments/zero_stats.hpp"
#include "zetamoments/zeros.hpp"
#include "zetamoments/zeta.hpp"

using namespace zm;

namespace {

// Criterion 1
constexpr double count_window = 2.0;
constexpr double gamma1_tol = 1e-8;
constexpr double sweep_seconds = 60.0;
// Criterion 2
constexpr double gonek_max_constant = 5.0;
constexpr double gonek_stability = 2.0;
// Criterion 3
constexpr double j1_lo = 0.5, j1_hi = 1.5;
// Criterion 4
constexpr double growth_margin = 0.5;
// Criterion 5
constexpr double cauchy_min_slack = 0.95;
// Criterion 6
constexpr double lemma_stability = 2.0;
constexpr double difference_max_constant = 10.0;
// Criterion 8
constexpr double case_i_constant = 100.0;
// Criterion 9
constexpr double mean_square_max_ratio = 5.0;

int failures = 0;

void report(int n, bool ok, const std::string& what) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", n, what.c_str());
  std::fflush(stdout);
  failures += ok ? 0 : 1;
}

std::string f(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

ZeroCache truncated(const ZeroCache& c, double T) {
  ZeroCache out;
  out.t_max = T;
  for (const auto& r : c.records)
    if (r.gamma <= T) out.records.push_back(r);
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  // 1. Zero infrastructure, single-threaded.
  set_max_threads(1);
  auto t0 = std::chrono::steady_clock::now();
  ZeroCache c1000 = sweep(1000.0);
  double elapsed = seconds_since(t0);
  set_max_threads(0);
  {
    CountAudit a = count_audit(c1000);
    double g1 = static_cast<double>(oracle::bisect_zero(14.0L, 14.3L));
    double dg = std::fabs(c1000.records.front().gamma - g1);
    bool ok = std::fabs(a.deviation_theta) <= count_window && dg <= gamma1_tol && elapsed <= sweep_seconds;
    report(1, ok,
           "N(1000) = " + std::to_string(a.n_found) + ", theta(T)/pi + 1 = " + f("%.3f", a.theta_count) +
               " (window 2); |gamma1 - oracle| = " + f("%.2e", dg) + " (tol 1e-8); sweep " + f("%.2f", elapsed) +
               " s (limit 60 s)");
  }

  // 2. Gonek explicit formula.
  {
    std::vector<double> per_T;
    for (double T : {250.0, 500.0, 1000.0}) {
      ZeroCache c = truncated(c1000, T);
      double m = 0.0;
      for (double x : {2.0, 3.0, 4.0, 5.0, 6.0, 2.5}) m = std::max(m, gonek_sum(c, x).fitted_constant);
      per_T.push_back(m);
    }
    double hi = std::max({per_T[0], per_T[1], per_T[2]}), lo = std::min({per_T[0], per_T[1], per_T[2]});
    bool ok = hi <= gonek_max_constant && lo > 0.0 && hi / lo < gonek_stability;
    report(2, ok,
           "fitted constants " + f("%.4f", per_T[0]) + ", " + f("%.4f", per_T[1]) + ", " + f("%.4f", per_T[2]) +
               " at T = 250, 500, 1000 (max <= 5, spread " + f("%.3f", lo > 0 ? hi / lo : INFINITY) + " < 2)");
  }

  std::fprintf(stderr, "sweeping to 1e4 and building local expansions\n");
  ZeroCache c1e4 = sweep(1e4);
  ZeroNeighborhoods nb4(c1e4);
  ZeroNeighborhoods nb3(c1000);
  const double logT4 = std::log(1e4);

  // 3. J_1 against (1/12) log^3 T.
  {
    MomentReport j1 = compute_Jk(nb4, 1.0, 1);
    double r = j1.normalized / (std::pow(logT4, 3) / 12.0);
    report(3, r >= j1_lo && r <= j1_hi, "J1(1e4) / ((1/12) log^3 T) = " + f("%.4f", r) + " (band [0.5, 1.5])");
  }

  // 4. Shifted-moment growth exponents between T = 1e3 and 1e4.
  {
    bool ok = true;
    std::string detail;
    const char* names[] = {"+1/logT", "-1/logT", "i/logT"};
    for (double k : {1.0, 2.0}) {
      for (int which = 0; which < 3; ++which) {
        double n3 = 0, n4 = 0;
        for (int side = 0; side < 2; ++side) {
          double T = side ? 1e4 : 1e3;
          double L = 1.0 / std::log(T);
          Complex a = which == 0 ? Complex(L, 0) : which == 1 ? Complex(-L, 0) : Complex(0, L);
          MomentReport r = shifted_moment(side ? nb4 : nb3, k, a);
          (side ? n4 : n3) = r.normalized;
        }
        double e = std::log(n4 / n3) / std::log(logT4 / std::log(1e3));
        bool this_ok = std::isfinite(e) && n3 > 0 && e <= k * k + growth_margin;
        ok = ok && this_ok;
        detail += std::string(detail.empty() ? "" : "; ") + "k=" + f("%g", k) + " " + names[which] + " exponent " +
                  f("%.3f", e) + (this_ok ? "" : " (over)");
      }
    }
    report(4, ok, detail + " (limit k^2 + 0.5)");
  }

  // 5. Cauchy transfer.
  {
    double R = 1.0 / logT4;
    CauchyTransferReport a = cauchy_transfer_audit(nb4, 1, 1, R, 64);
    CauchyTransferReport b = cauchy_transfer_audit(nb4, 1, 2, R, 64);
    report(5, a.slack >= cauchy_min_slack && b.slack >= cauchy_min_slack,
           "slack (k,l) = (1,1): " + f("%.4f", a.slack) + ", (1,2): " + f("%.4f", b.slack) + " (min 0.95)");
  }

  // 6. Majorant lemma constants across t bands.
  {
    auto p3 = lemma_points(128, 900.0, 1100.0, 7);
    auto p4 = lemma_points(128, 9000.0, 11000.0, 7);
    bool ok = true;
    std::string detail;
    for (LemmaVariant v : {LemmaVariant::lambda_weighted, LemmaVariant::prime_only}) {
      LemmaAuditOptions opt;
      opt.variant = v;
      LemmaAuditTable a = lemma21_audit(opt, p3), b = lemma21_audit(opt, p4);
      double ca = a.fitted_constant, cb = b.fitted_constant;
      double spread = std::max(std::fabs(ca), std::fabs(cb)) / std::min(std::fabs(ca), std::fabs(cb));
      bool this_ok = std::isfinite(ca) && std::isfinite(cb) && (ca > 0) == (cb > 0) && spread < lemma_stability;
      ok = ok && this_ok;
      detail += std::string(lemma_variant_name(v)) + " " + f("%.4f", ca) + " / " + f("%.4f", cb) + " (spread " +
                f("%.3f", spread) + "); ";
    }
    DifferenceAudit d3 = lemma31_difference(XPolicy::tau_squared_log, 0.0, Constants::lambda0, 0.0, p3);
    DifferenceAudit d4 = lemma31_difference(XPolicy::tau_squared_log, 0.0, Constants::lambda0, 0.0, p4);
    double dc = std::max(d3.fitted_constant, d4.fitted_constant);
    ok = ok && std::isfinite(dc) && dc <= difference_max_constant;
    report(6, ok, detail + "difference constant " + f("%.4f", dc) + " (max 10)");
  }

  // 7. Dyadic reconstruction.
  {
    long violations = 0, cases = 0;
    for (int side = 0; side < 2; ++side) {
      const ZeroNeighborhoods& nb = side ? nb4 : nb3;
      double L = 1.0 / std::log(side ? 1e4 : 1e3);
      for (double k : {1.0, 2.0}) {
        for (Complex a : {Complex(L, 0), Complex(-L, 0), Complex(0, L)}) {
          LargeValueHistogram h = large_value_histogram(nb, k, a, {});
          double direct = shifted_moment(nb, k, a).raw_sum;
          double recon = dyadic_reconstruction(h, k);
          double upper = std::exp(2 * k) * direct + std::exp(6 * k) * static_cast<double>(h.total);
          ++cases;
          if (!(direct <= recon && recon <= upper)) ++violations;
        }
      }
    }
    report(7, violations == 0, std::to_string(violations) + " violations in " + std::to_string(cases) + " cases");
  }

  // 8. Large-value histogram at T = 1e4.
  {
    bool ok = true;
    long bad_mono = 0, beyond = 0, case_i_bad = 0;
    double thr = vd_vacuity_threshold(1e4);
    double LL = std::log(logT4);
    double L = 1.0 / logT4;
    for (Complex a : {Complex(L, 0), Complex(-L, 0), Complex(0, L)}) {
      LargeValueHistogram h = large_value_histogram(nb4, 1.0, a, {});
      for (std::size_t i = 1; i < h.counts.size(); ++i) bad_mono += h.counts[i] > h.counts[i - 1];
      std::vector<double> logs;
      for (double v : shifted_abs_values(nb4, a)) logs.push_back(std::log(v));
      beyond += count_large_values(logs, thr);
      for (double V = std::sqrt(LL); V <= LL; V += (LL - std::sqrt(LL)) / 16.0) {
        double bound = lemma_vd_case_bound(VdCase::case_i, 1e4, V, static_cast<double>(logs.size()), case_i_constant);
        if (static_cast<double>(count_large_values(logs, V)) > bound) ++case_i_bad;
      }
    }
    ok = bad_mono == 0 && beyond == 0 && case_i_bad == 0;
    report(8, ok,
           "monotonicity breaks " + std::to_string(bad_mono) + ", zeros beyond V = " + f("%.4f", thr) + ": " +
               std::to_string(beyond) + ", case (i) bound (C = 100) violations " + std::to_string(case_i_bad));
  }

  // 9. Mean square over zeros.
  {
    bool ok = true;
    double worst = 0.0;
    for (const ZeroCache* c : {&c1000, &c1e4}) {
      double L = 1.0 / std::log(c->t_max);
      for (double xi : {20.0, 50.0, 100.0}) {
        for (Complex a : {Complex(0, 0), Complex(L, 0)}) {
          std::vector<Complex> ones(static_cast<std::size_t>(xi), Complex(1, 0));
          std::vector<Complex> twos(static_cast<std::size_t>(xi), Complex(2, 0));
          MeanSquareReport r1 = mean_square_over_zeros(*c, ones, a);
          MeanSquareReport r2 = mean_square_over_zeros(*c, twos, a);
          worst = std::max(worst, r1.ratio);
          ok = ok && r1.ratio <= mean_square_max_ratio && r2.lhs == 4.0 * r1.lhs;
        }
      }
    }
    report(9, ok, "max ratio " + f("%.4f", worst) + " over xi in {20, 50, 100}, T in {1e3, 1e4} (max 5); lhs(2a) == 4 lhs(a)");
  }

  // 10. Determinism.
  {
    CampaignConfig cfg = default_campaign(1000.0);
    long n = static_cast<long>(c1000.size());
    std::string a = campaign_report_string(cfg, run_campaign(cfg, &c1000), n);
    set_max_threads(1);
    std::string b = campaign_report_string(cfg, run_campaign(cfg, &c1000), n);
    set_max_threads(0);
    std::string c = campaign_report_string(cfg, run_campaign(cfg, nullptr), n);
    report(10, a == b && a == c,
           "three campaign reruns at T = 1000 (" + std::to_string(a.size()) + " bytes) " +
               (a == b && a == c ? "byte-identical" : "differ"));
  }

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
