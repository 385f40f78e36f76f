#include "zetamoments/lemma_audit.hpp"

#include <cmath>
#include <limits>

#include "zetamoments/error.hpp"
#include "zetamoments/lowdisc.hpp"
#include "zetamoments/zeta.hpp"

namespace zm {

namespace {

constexpr double e30 = 10686474581524.463;  // e^30

double tau_of(LemmaVariant v, double t) { return std::fabs(t) + (v == LemmaVariant::prime_only ? e30 : 3.0); }

double pick_x(XPolicy p, double x_explicit, double tau, double T) {
  switch (p) {
    case XPolicy::tau_squared_log: {
      double l = std::log(tau);
      return l * l;
    }
    case XPolicy::sqrt_T: return std::sqrt(T);
    case XPolicy::explicit_x: return x_explicit;
  }
  return x_explicit;
}

// Returns an empty string when the sample satisfies the lemma's hypotheses.
std::string check_sample(double x, double tau, double lambda) {
  if (!(x >= 2.0)) return "x < 2";
  if (x > tau * tau) return "x > tau^2";
  if (lambda < Constants::lambda0 || lambda > std::log(x) / 4.0) return "lambda outside [lambda0, log(x)/4]";
  return {};
}

}  // namespace

const char* lemma_variant_name(LemmaVariant v) noexcept {
  return v == LemmaVariant::prime_only ? "prime_only" : "lambda_weighted";
}

const char* x_policy_name(XPolicy p) noexcept {
  switch (p) {
    case XPolicy::tau_squared_log: return "tau_squared_log";
    case XPolicy::sqrt_T: return "sqrt_T";
    case XPolicy::explicit_x: return "explicit";
  }
  return "unknown";
}

std::vector<LemmaPoint> lemma_points(std::size_t n, double t_lo, double t_hi, std::uint64_t seed) {
  if (!(t_hi >= t_lo)) fail(ErrorCode::precondition, "lemma_points: empty t range");
  Halton2 h(seed);
  std::vector<LemmaPoint> pts(n);
  for (auto& p : pts) {
    double a, b;
    h.next(a, b);
    p.u = a;
    p.t = t_lo + (t_hi - t_lo) * b;
  }
  return pts;
}

LemmaAuditTable lemma21_audit(const LemmaAuditOptions& opt, std::span<const LemmaPoint> points) {
  LemmaAuditTable tab;
  tab.variant = opt.variant;
  tab.min_slack = std::numeric_limits<double>::infinity();
  tab.fitted_constant = -std::numeric_limits<double>::infinity();
  for (const LemmaPoint& pt : points) {
    LemmaSample s;
    s.t = pt.t;
    s.tau = tau_of(opt.variant, pt.t);
    s.x = pick_x(opt.policy, opt.x_explicit, s.tau, opt.T);
    s.note = check_sample(s.x, s.tau, opt.lambda);
    if (s.note.empty() && (pt.u < 0.0 || pt.u > 1.0)) s.note = "u outside [0, 1]";
    if (!s.note.empty()) {
      s.skipped = true;
      ++tab.skipped;
      tab.samples.push_back(s);
      continue;
    }
    DirichletPolySpec spec{s.x, opt.lambda, opt.variant == LemmaVariant::prime_only, std::nullopt};
    const double sl = spec.sigma_lambda();
    s.sigma = 0.5 + pt.u * (sl - 0.5);
    try {
      double az = std::abs(zeta(Complex(s.sigma, s.t)).value);
      s.lhs = az > 1.0 ? std::log(az) : 0.0;
      s.poly_abs = std::abs(opt.variant == LemmaVariant::prime_only ? prime_sum(spec, Complex(0.0, s.t))
                                                                     : smoothed_sum(spec, Complex(0.0, s.t)));
    } catch (const Error& e) {
      s.skipped = true;
      s.note = e.what();
      ++tab.skipped;
      tab.samples.push_back(s);
      continue;
    }
    s.main_rhs = s.poly_abs + 0.5 * (1.0 + opt.lambda) * std::log(s.tau) / std::log(s.x);
    s.slack = s.main_rhs - s.lhs;
    s.shape = opt.variant == LemmaVariant::prime_only ? std::log(std::log(std::log(s.tau))) : 1.0;
    double c = (s.lhs - s.main_rhs) / s.shape;
    if (c > tab.fitted_constant) {
      tab.fitted_constant = c;
      tab.argmax_sigma = s.sigma;
      tab.argmax_t = s.t;
    }
    tab.min_slack = std::min(tab.min_slack, s.slack);
    ++tab.used;
    tab.samples.push_back(s);
  }
  if (tab.used == 0) {
    tab.min_slack = 0.0;
    tab.fitted_constant = 0.0;
  }
  return tab;
}

LemmaAuditTable lemma21_audit(const DirichletPolySpec& spec, std::span<const LemmaPoint> points) {
  spec.validate();
  LemmaAuditOptions opt;
  opt.variant = spec.prime_only ? LemmaVariant::prime_only : LemmaVariant::lambda_weighted;
  opt.policy = XPolicy::explicit_x;
  opt.x_explicit = spec.x;
  opt.lambda = spec.lambda;
  return lemma21_audit(opt, points);
}

DifferenceAudit lemma31_difference(XPolicy policy, double x_explicit, double lambda, double T,
                                   std::span<const LemmaPoint> points) {
  DifferenceAudit out;
  for (const LemmaPoint& pt : points) {
    double tau = tau_of(LemmaVariant::prime_only, pt.t);
    double x = pick_x(policy, x_explicit, tau, T);
    if (!(x >= 2.0) || x > tau * tau || pt.u < 0.0 || pt.u > 1.0) {
      ++out.skipped;
      continue;
    }
    DirichletPolySpec full{x, lambda, false, std::nullopt};
    double sigma = 0.5 + pt.u * (full.sigma_lambda() - 0.5);
    Complex s(sigma, pt.t);
    Complex d = smoothed_sum_at(full, s) - prime_sum_at(full, s);
    double diff = std::abs(d);
    double shape = std::log(std::log(std::log(tau)));
    out.max_difference = std::max(out.max_difference, diff);
    if (diff / shape > out.fitted_constant) {
      out.fitted_constant = diff / shape;
      out.argmax_t = pt.t;
    }
    ++out.used;
  }
  return out;
}

}  // namespace zm
