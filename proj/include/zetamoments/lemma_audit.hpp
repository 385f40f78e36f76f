#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zetamoments/constants.hpp"
#include "zetamoments/dirichlet.hpp"

namespace zm {

enum class LemmaVariant { lambda_weighted, prime_only };
enum class XPolicy { tau_squared_log, sqrt_T, explicit_x };

const char* lemma_variant_name(LemmaVariant v) noexcept;
const char* x_policy_name(XPolicy p) noexcept;

// sigma = 1/2 + u (sigma_lambda - 1/2), u in [0, 1].
struct LemmaPoint {
  double u = 0.0;
  double t = 0.0;
};

std::vector<LemmaPoint> lemma_points(std::size_t n, double t_lo, double t_hi, std::uint64_t seed);

struct LemmaAuditOptions {
  LemmaVariant variant = LemmaVariant::lambda_weighted;
  XPolicy policy = XPolicy::tau_squared_log;
  double x_explicit = 0.0;
  double lambda = Constants::lambda0;
  double T = 0.0;  // height used by XPolicy::sqrt_T
};

struct LemmaSample {
  double sigma = 0.0;
  double t = 0.0;
  double tau = 0.0;
  double x = 0.0;
  double lhs = 0.0;       // log+ |zeta(sigma + it)|
  double poly_abs = 0.0;  // |P(sigma_lambda + it)|
  double main_rhs = 0.0;  // poly_abs + (1+lambda)/2 log tau / log x
  double slack = 0.0;     // main_rhs - lhs
  double shape = 1.0;     // 1, or log log log tau for the prime-only form
  bool skipped = false;
  std::string note;
};

struct LemmaAuditTable {
  LemmaVariant variant = LemmaVariant::lambda_weighted;
  std::vector<LemmaSample> samples;
  long used = 0;
  long skipped = 0;
  double min_slack = 0.0;
  // max over samples of (lhs - main_rhs) / shape
  double fitted_constant = 0.0;
  double argmax_sigma = 0.0;
  double argmax_t = 0.0;
};

LemmaAuditTable lemma21_audit(const LemmaAuditOptions& opt, std::span<const LemmaPoint> points);
// Explicit x = spec.x; spec.prime_only selects the variant.
LemmaAuditTable lemma21_audit(const DirichletPolySpec& spec, std::span<const LemmaPoint> points);

struct DifferenceAudit {
  long used = 0;
  long skipped = 0;
  double max_difference = 0.0;
  // max |difference| / log log log tau with tau = |t| + e^30
  double fitted_constant = 0.0;
  double argmax_t = 0.0;
  // The prime sum written with log(x/n) inside a sum over p coincides with
  // log(x/p); the recorded gap between the two readings.
  double typo_variant_difference = 0.0;
};

// |sum_n Lambda(n)/(n^s log n) w(n) - sum_p p^{-s} w(p)| at s = sigma + it.
DifferenceAudit lemma31_difference(XPolicy policy, double x_explicit, double lambda, double T,
                                   std::span<const LemmaPoint> points);

}  // namespace zm
