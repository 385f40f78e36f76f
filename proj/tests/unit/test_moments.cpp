#include <cmath>
#include <vector>

#include "doctest.h"
#include "zetamoments/constants.hpp"
#include "zetamoments/error.hpp"
#include "zetamoments/large_values.hpp"
#include "zetamoments/lemma_audit.hpp"
#include "zetamoments/moments.hpp"
#include "zetamoments/zeros.hpp"
#include "zetamoments/zeta.hpp"

using namespace zm;

namespace {

const ZeroCache& cache1000() {
  static const ZeroCache c = sweep(1000.0);
  return c;
}

const ZeroNeighborhoods& nb1000() {
  static const ZeroNeighborhoods nb(cache1000());
  return nb;
}

}  // namespace

TEST_CASE("derivative moments") {
  MomentReport j0 = compute_Jk(nb1000(), 1.0, 0);
  CHECK(j0.normalized == 0.0);
  CHECK(j0.vanishing_terms == j0.count);

  MomentReport j1 = compute_Jk(nb1000(), 1.0, 1);
  CHECK(j1.count == static_cast<long>(cache1000().size()));
  CHECK(j1.normalized == doctest::Approx(j1.raw_sum / j1.count));
  CHECK(j1.conjectured_exponent == 3.0);
  CHECK(std::fabs(j1.naive_sum - j1.raw_sum) <= 1e-9 * j1.raw_sum);

  // Expansions and direct evaluation agree.
  MomentReport direct = compute_Jk(cache1000(), 1.0, 1);
  CHECK(direct.raw_sum == doctest::Approx(j1.raw_sum).epsilon(1e-10));

  MomentReport j2 = compute_Jk(nb1000(), 1.0, 2);
  CHECK(j2.conjectured_exponent == 5.0);
  CHECK_THROWS_AS(compute_Jk(nb1000(), 1.0, 3), Error);
  CHECK_THROWS_AS(compute_Jk(nb1000(), -1.0, 1), Error);
}

TEST_CASE("J_k is monotone in T") {
  double prev = 0.0;
  for (double T : {200.0, 400.0, 600.0, 800.0, 1000.0}) {
    ZeroCache c;
    c.t_max = T;
    for (const auto& r : cache1000().records)
      if (r.gamma <= T) c.records.push_back(r);
    double raw = compute_Jk(c, 1.0, 1).raw_sum;
    CHECK(raw >= prev);
    prev = raw;
  }
}

TEST_CASE("shifted moments") {
  double L = 1.0 / std::log(1000.0);
  CHECK(shifted_moment(nb1000(), 1.0, {0, 0}).normalized == 0.0);
  CHECK(shifted_moment(nb1000(), 2.0, {0, 0}).normalized == 0.0);

  MomentReport im = shifted_moment(nb1000(), 1.0, {0, L});
  double direct = 0.0;
  for (const auto& r : cache1000().records) direct += std::norm(hardy_z(r.gamma + L).value.real());
  CHECK(im.raw_sum == doctest::Approx(direct).epsilon(1e-8));

  MomentReport plus = shifted_moment(nb1000(), 1.0, {L, 0});
  MomentReport minus = shifted_moment(nb1000(), 1.0, {-L, 0});
  double C = 0.0;
  for (const auto& r : cache1000().records) C = std::max(C, std::abs(chi({0.5 - L, r.gamma}).value));
  CHECK(minus.raw_sum <= C * C * plus.raw_sum * (1 + 1e-12));

  CHECK(admissible_shift({L, 0}, 1000.0));
  CHECK(!admissible_shift({2 * L, 0}, 1000.0));
  CHECK_THROWS_AS(shifted_moment(nb1000(), 1.0, {2 * L, 0}), Error);
}

TEST_CASE("Cauchy transfer audit") {
  double R = 1.0 / std::log(1000.0);
  CauchyTransferReport a = cauchy_transfer_audit(nb1000(), 1, 1, R, 64);
  CHECK(a.passed);
  CHECK(a.slack >= 0.95);
  CauchyTransferReport b = cauchy_transfer_audit(nb1000(), 1, 1, R / 2, 64);
  CHECK(a.prefactor == doctest::Approx(b.prefactor / 4.0));
  CauchyTransferReport c = cauchy_transfer_audit(nb1000(), 1, 2, R, 64);
  CHECK(c.prefactor == doctest::Approx(std::pow(2.0 / (R * R), 2)));
  CHECK(c.passed);
  CHECK_THROWS_AS(cauchy_transfer_audit(nb1000(), 1, 1, R, 10), Error);
  CHECK_THROWS_AS(cauchy_transfer_audit(nb1000(), 1, 1, 2 * R, 64), Error);
}

TEST_CASE("large-value parameters") {
  double T = 1e4, N = 10000;
  double LL = std::log(std::log(T)), L3 = std::log(LL);
  for (double V : {1.6, 2.0, 2.2, 3.0, 5.0, 9.0}) {
    VdParams p = lemma_vd(T, V, N);
    CHECK(p.x <= std::sqrt(T) * (1 + 1e-15));
    CHECK(p.V1 + 9 * V / (10 * p.A) == doctest::Approx(V));
    CHECK(p.V2 == doctest::Approx(V / (10 * p.A)));
    CHECK(p.z == doctest::Approx(std::pow(p.x, 1.0 / LL)));
    if (V <= LL) CHECK(p.A == doctest::Approx(0.5 * L3));
    else if (V <= 0.5 * LL * L3) CHECK(p.A == doctest::Approx(LL * L3 / (2 * V)));
    else CHECK(p.A == 1.0);
  }
  CHECK(vd_vacuity_threshold(T) == doctest::Approx(0.4 * std::log(T) / LL));
  CHECK((1.0 + Constants::lambda0) / 4.0 == doctest::Approx(0.3918).epsilon(1e-4));
  CHECK((1.0 + Constants::lambda0) / 4.0 < 0.4);
}

TEST_CASE("large-value histograms") {
  double L = 1.0 / std::log(1000.0);
  LargeValueHistogram h = large_value_histogram(nb1000(), 1.0, {L, 0}, {});
  for (std::size_t i = 1; i < h.counts.size(); ++i) CHECK(h.counts[i] <= h.counts[i - 1]);
  CHECK(h.counts.back() == 0);
  CHECK(h.total == static_cast<long>(cache1000().size()));

  LargeValueHistogram high = large_value_histogram(nb1000(), 1.0, {L, 0}, {h.max_log_value + 1.0 > 3 ? h.max_log_value + 1.0 : 3.0});
  CHECK(high.counts[0] == 0);
  for (std::size_t i = 0; i < h.counts.size(); ++i)
    if (h.config.V_grid[i] > h.config.vacuity_threshold) CHECK(h.counts[i] == 0);

  CHECK_THROWS_AS(large_value_histogram(nb1000(), 1.0, {L, 0}, {2.0, 3.0}), Error);
  CHECK_THROWS_AS(large_value_histogram(nb1000(), 1.0, {L, 0}, {4.0, 3.0}), Error);
}

TEST_CASE("dyadic reconstruction") {
  std::vector<double> one{3.5};
  LargeValueHistogram h1 = histogram_from_values(one, 1e4, {0, 0}, {3.0, 4.0});
  CHECK(dyadic_reconstruction(h1, 1.0) == doctest::Approx(std::exp(8.0)));
  CHECK(dyadic_reconstruction(h1, 1.0) / std::exp(7.0) <= std::exp(2.0));

  std::vector<double> low{0.5, 1.0, -2.0, 2.9};
  LargeValueHistogram h2 = histogram_from_values(low, 1e4, {0, 0}, {3.0, 4.0});
  CHECK(dyadic_reconstruction(h2, 1.0) == doctest::Approx(std::exp(6.0) * 4));

  LargeValueHistogram frac = histogram_from_values(one, 1e4, {0, 0}, {3.0, 3.5, 4.0});
  CHECK_THROWS_AS(dyadic_reconstruction(frac, 1.0), Error);

  double L = 1.0 / std::log(1000.0);
  for (double k : {1.0, 2.0}) {
    for (Complex a : {Complex(L, 0), Complex(-L, 0), Complex(0, L)}) {
      LargeValueHistogram h = large_value_histogram(nb1000(), k, a, {});
      double direct = shifted_moment(nb1000(), k, a).raw_sum;
      double recon = dyadic_reconstruction(h, k);
      CHECK(direct <= recon);
      CHECK(recon <= std::exp(2 * k) * direct + std::exp(6 * k) * h.total);
    }
  }
}

TEST_CASE("histogram moment bound on a fine grid") {
  double L = 1.0 / std::log(1000.0);
  std::vector<double> logs;
  for (double v : shifted_abs_values(nb1000(), {L, 0})) logs.push_back(std::log(v));
  std::vector<double> grid;
  for (double v = -12.0; v <= 3.0; v += 0.05) grid.push_back(v);
  LargeValueHistogram h = histogram_from_values(logs, 1000.0, {L, 0}, grid, 1.0, false);
  double bound = histogram_moment_bound(h, 1.0);
  double direct = shifted_moment(nb1000(), 1.0, {L, 0}).raw_sum;
  CHECK(bound >= direct);
  CHECK(bound <= std::exp(2 * 0.05) * direct * (1 + 1e-12) + std::exp(2 * -12.0) * h.total);
}

TEST_CASE("continuous moment") {
  ContinuousMomentReport tiny = continuous_moment(1e-9, 100.0, 0.01);
  CHECK(tiny.value == doctest::Approx(1.0 - 1.0 / 100.0).epsilon(1e-6));
  ContinuousMomentReport a = continuous_moment(1.0, 1000.0, 0.01);
  ContinuousMomentReport b = continuous_moment(1.0, 1000.0, 0.005);
  CHECK(std::fabs(a.value - b.value) / b.value < 0.005);
  CHECK_THROWS_AS(continuous_moment(1.0, 1000.0, 0.02), Error);
}

TEST_CASE("majorant lemma audits") {
  auto pts = lemma_points(64, 900.0, 1100.0, 5);
  LemmaAuditOptions opt;
  LemmaAuditTable tab = lemma21_audit(opt, pts);
  CHECK(tab.used == 64);
  CHECK(std::isfinite(tab.fitted_constant));
  for (const auto& s : tab.samples) {
    CHECK(s.lhs >= 0.0);
    if (s.lhs == 0.0) CHECK(s.slack == doctest::Approx(s.main_rhs));
  }

  std::vector<LemmaPoint> one{{0.0, 1000.0}};
  LemmaAuditTable t1 = lemma21_audit(opt, one);
  CHECK(t1.samples[0].sigma == 0.5);
  CHECK(std::isfinite(t1.samples[0].slack));

  DirichletPolySpec tiny_x{2.0, Constants::lambda0, false, std::nullopt};
  LemmaAuditTable skipped = lemma21_audit(tiny_x, one);
  CHECK(skipped.skipped == 1);
  CHECK(!skipped.samples[0].note.empty());

  DifferenceAudit d = lemma31_difference(XPolicy::tau_squared_log, 0.0, Constants::lambda0, 0.0, pts);
  CHECK(d.used == 64);
  CHECK(d.fitted_constant <= 10.0);
  CHECK(d.typo_variant_difference == 0.0);
}
