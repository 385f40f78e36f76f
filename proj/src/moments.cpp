#include "zetamoments/moments.hpp"

#include <cmath>
#include <string>

#include "zetamoments/constants.hpp"
#include "zetamoments/error.hpp"
#include "zetamoments/parallel.hpp"
#include "zetamoments/summation.hpp"

namespace zm {

namespace {

template <class Fn>
std::vector<double> per_zero(const ZeroCache& cache, Fn&& eval, std::vector<double>* errors) {
  std::vector<double> values(cache.size()), errs(cache.size());
  parallel_for(cache.size(), [&](std::size_t i) {
    try {
      EvalResult r = eval(i);
      values[i] = std::abs(r.value);
      errs[i] = r.abs_error;
    } catch (const Error& e) {
      fail(ErrorCode::evaluation,
           "evaluation failed at zero index " + std::to_string(cache.records[i].index) + ": " + e.what());
    }
  });
  if (errors) *errors = std::move(errs);
  return values;
}

void require_nonempty(const ZeroCache& cache, const char* op) {
  if (cache.empty()) fail(ErrorCode::empty, std::string(op) + ": empty cache");
}

void require_k(double k, const char* op) {
  if (!std::isfinite(k) || k <= 0.0) fail(ErrorCode::precondition, std::string(op) + ": k must be positive");
}

MomentReport moment_from_values(const ZeroCache& cache, const std::vector<double>& values,
                                const std::vector<double>& errors, double k, bool snap) {
  MomentReport r;
  r.k = k;
  r.t_max = cache.t_max;
  r.count = static_cast<long>(values.size());
  std::vector<double> terms(values.size());
  KahanSum err;
  for (std::size_t i = 0; i < values.size(); ++i) {
    double v = values[i];
    if (snap && v <= 10.0 * cache.records[i].residual + errors[i]) {
      ++r.vanishing_terms;
      terms[i] = 0.0;
      continue;
    }
    terms[i] = std::pow(v, 2.0 * k);
    r.max_term = std::max(r.max_term, terms[i]);
    err.add(2.0 * k * std::pow(v + errors[i], 2.0 * k - 1.0) * errors[i]);
  }
  r.raw_sum = compensated_sum(terms);
  r.naive_sum = naive_sum(terms);
  r.normalized = r.count ? r.raw_sum / static_cast<double>(r.count) : 0.0;
  r.abs_error = err.value() + 4.0 * std::numeric_limits<double>::epsilon() * r.raw_sum;
  return r;
}

void finish_scale(MomentReport& r, double exponent) {
  r.conjectured_exponent = exponent;
  r.ratio_to_conjecture = r.normalized / std::pow(std::log(r.t_max), exponent);
}

void check_ell(int ell, const char* op) {
  if (ell < 0 || ell > 2) fail(ErrorCode::precondition, std::string(op) + ": ell must be 0, 1 or 2");
}

void check_shift(Complex alpha, double t_max, const char* op) {
  if (!admissible_shift(alpha, t_max))
    fail(ErrorCode::precondition, std::string(op) + ": requires |alpha| <= 1 and |Re alpha| <= 1/log T");
}

}  // namespace

ZeroNeighborhoods::ZeroNeighborhoods(const ZeroCache& cache, int order, double radius)
    : cache_(cache), expansions_(cache.size()), radius_(radius) {
  parallel_for(cache.size(), [&](std::size_t i) {
    expansions_[i] = LocalExpansion(Complex(0.5, cache.records[i].gamma), order, radius);
  }, 8);
}

bool admissible_shift(Complex alpha, double t_max) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()) || !(t_max > 1.0)) return false;
  double lim = 1.0 / std::log(t_max);
  return std::abs(alpha) <= 1.0 && std::fabs(alpha.real()) <= lim * (1.0 + 1e-12);
}

std::vector<double> derivative_abs_values(const ZeroCache& cache, int ell, std::vector<double>* errors) {
  check_ell(ell, "derivative_abs_values");
  return per_zero(cache, [&](std::size_t i) {
    Complex rho(0.5, cache.records[i].gamma);
    if (ell == 0) return zeta(rho);
    ZetaJet j = zeta_jet(rho, ell);
    double f = ell == 2 ? 2.0 : 1.0;
    return EvalResult{f * j.coeffs[ell], f * j.abs_error[ell], Method::euler_maclaurin};
  }, errors);
}

std::vector<double> derivative_abs_values(const ZeroNeighborhoods& nb, int ell, std::vector<double>* errors) {
  check_ell(ell, "derivative_abs_values");
  return per_zero(nb.cache(), [&](std::size_t i) { return nb.at(i).derivative(ell); }, errors);
}

std::vector<double> shifted_abs_values(const ZeroCache& cache, Complex alpha, std::vector<double>* errors) {
  return per_zero(cache, [&](std::size_t i) { return zeta(Complex(0.5, cache.records[i].gamma) + alpha); }, errors);
}

std::vector<double> shifted_abs_values(const ZeroNeighborhoods& nb, Complex alpha, std::vector<double>* errors) {
  const bool local = std::abs(alpha) <= nb.radius();
  return per_zero(nb.cache(), [&](std::size_t i) {
    if (local) return nb.at(i).eval(alpha);
    return zeta(Complex(0.5, nb.cache().records[i].gamma) + alpha);
  }, errors);
}

MomentReport compute_Jk(const ZeroCache& cache, double k, int ell) {
  require_nonempty(cache, "compute_Jk");
  require_k(k, "compute_Jk");
  check_ell(ell, "compute_Jk");
  std::vector<double> errs;
  auto vals = derivative_abs_values(cache, ell, &errs);
  MomentReport r = moment_from_values(cache, vals, errs, k, ell == 0);
  r.ell = ell;
  finish_scale(r, k * (k + 2.0 * ell));
  return r;
}

MomentReport compute_Jk(const ZeroNeighborhoods& nb, double k, int ell) {
  require_nonempty(nb.cache(), "compute_Jk");
  require_k(k, "compute_Jk");
  check_ell(ell, "compute_Jk");
  std::vector<double> errs;
  auto vals = derivative_abs_values(nb, ell, &errs);
  MomentReport r = moment_from_values(nb.cache(), vals, errs, k, ell == 0);
  r.ell = ell;
  finish_scale(r, k * (k + 2.0 * ell));
  return r;
}

MomentReport shifted_moment(const ZeroCache& cache, double k, Complex alpha) {
  require_nonempty(cache, "shifted_moment");
  require_k(k, "shifted_moment");
  check_shift(alpha, cache.t_max, "shifted_moment");
  std::vector<double> errs;
  auto vals = shifted_abs_values(cache, alpha, &errs);
  MomentReport r = moment_from_values(cache, vals, errs, k, alpha == Complex(0.0));
  r.alpha = alpha;
  finish_scale(r, k * k);
  return r;
}

MomentReport shifted_moment(const ZeroNeighborhoods& nb, double k, Complex alpha) {
  require_nonempty(nb.cache(), "shifted_moment");
  require_k(k, "shifted_moment");
  check_shift(alpha, nb.t_max(), "shifted_moment");
  std::vector<double> errs;
  auto vals = shifted_abs_values(nb, alpha, &errs);
  MomentReport r = moment_from_values(nb.cache(), vals, errs, k, alpha == Complex(0.0));
  r.alpha = alpha;
  finish_scale(r, k * k);
  return r;
}

CauchyTransferReport cauchy_transfer_audit(const ZeroNeighborhoods& nb, int k, int ell, double R, int n_samples) {
  require_nonempty(nb.cache(), "cauchy_transfer_audit");
  if (k < 1 || ell < 1 || ell > nb.at(0).order())
    fail(ErrorCode::precondition, "cauchy_transfer_audit: requires integers k >= 1 and ell >= 1");
  const double T = nb.t_max();
  if (!(R > 0.0) || R > 1.0 / std::log(T) * (1.0 + 1e-12) || R > nb.radius())
    fail(ErrorCode::precondition, "cauchy_transfer_audit: requires 0 < R <= 1/log T");
  if (n_samples < 64) fail(ErrorCode::precondition, "cauchy_transfer_audit: n_samples must be >= 64");

  CauchyTransferReport r;
  r.k = k;
  r.ell = ell;
  r.R = R;
  r.n_samples = n_samples;
  {
    auto vals = derivative_abs_values(nb, ell);
    KahanSum s;
    for (double v : vals) s.add(std::pow(v, 2.0 * k));
    r.lhs = s.value();
  }
  double fact = 1.0;
  for (int i = 2; i <= ell; ++i) fact *= i;
  r.prefactor = std::pow(fact / std::pow(R, ell), 2.0 * k);

  constexpr int rings = 5;
  std::vector<Complex> alphas;
  for (int ring = rings; ring >= 1; --ring) {
    double rad = R * ring / rings;
    for (int i = 0; i < n_samples; ++i) {
      double ang = Constants::two_pi * i / n_samples;
      alphas.push_back(std::polar(rad, ang));
    }
  }
  std::vector<double> sums(alphas.size());
  parallel_for(alphas.size(), [&](std::size_t a) {
    KahanSum s;
    for (std::size_t z = 0; z < nb.size(); ++z) s.add(std::pow(std::abs(nb.at(z).eval(alphas[a]).value), 2.0 * k));
    sums[a] = s.value();
  }, 4);
  std::size_t best = 0;
  for (std::size_t a = 1; a < sums.size(); ++a)
    if (sums[a] > sums[best]) best = a;
  r.max_shifted_sum = sums[best];
  r.argmax_alpha = alphas[best];
  r.alphas_sampled = static_cast<long>(alphas.size());
  r.rhs_sampled = r.prefactor * r.max_shifted_sum;
  r.slack = r.lhs > 0.0 ? r.rhs_sampled / r.lhs : std::numeric_limits<double>::infinity();
  r.passed = r.slack >= 1.0 - cauchy_sampling_tolerance;
  return r;
}

CauchyTransferReport cauchy_transfer_audit(const ZeroCache& cache, int k, int ell, double R, int n_samples) {
  require_nonempty(cache, "cauchy_transfer_audit");
  return cauchy_transfer_audit(ZeroNeighborhoods(cache), k, ell, R, n_samples);
}

ContinuousMomentReport continuous_moment(double k, double t_max, double step) {
  require_k(k, "continuous_moment");
  if (!std::isfinite(t_max) || t_max <= 1.0 || t_max > 1e5)
    fail(ErrorCode::precondition, "continuous_moment: t_max must be in (1, 1e5]");
  if (!(step > 0.0) || step > 0.01) fail(ErrorCode::precondition, "continuous_moment: step must be in (0, 0.01]");
  ContinuousMomentReport r;
  r.k = k;
  r.t_max = t_max;
  const double a = r.t_start, b = t_max;
  long n = 2 * static_cast<long>(std::ceil((b - a) / (2.0 * step)));
  const double h = (b - a) / static_cast<double>(n);
  r.step = h;
  r.intervals = n;
  auto f = [&](double t) {
    double v = t < 10.0 ? std::abs(zeta(Complex(0.5, t)).value) : std::fabs(hardy_z(t).value.real());
    return std::pow(v, 2.0 * k);
  };
  constexpr long block = 2048;
  const long points = n + 1;
  const long n_blocks = (points + block - 1) / block;
  std::vector<double> partial(static_cast<std::size_t>(n_blocks));
  parallel_for(static_cast<std::size_t>(n_blocks), [&](std::size_t bi) {
    long lo = static_cast<long>(bi) * block, hi = std::min(points, lo + block);
    KahanSum s;
    for (long i = lo; i < hi; ++i) {
      double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      double t = i == n ? b : a + h * static_cast<double>(i);
      s.add(w * f(t));
    }
    partial[bi] = s.value();
  }, 1);
  r.integral = compensated_sum(partial) * h / 3.0;
  r.value = r.integral / t_max;
  return r;
}

}  // namespace zm
