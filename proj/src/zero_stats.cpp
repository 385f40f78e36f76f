#include "zetamoments/zero_stats.hpp"

#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <vector>

#include "phase.hpp"
#include "zetamoments/constants.hpp"
#include "zetamoments/error.hpp"
#include "zetamoments/parallel.hpp"
#include "zetamoments/primes.hpp"
#include "zetamoments/summation.hpp"

namespace zm {

double mangoldt_real(double x) {
  if (!(x >= 1.0) || x != std::floor(x) || x > static_cast<double>(SieveTable::default_limit)) return 0.0;
  return mangoldt(static_cast<std::uint64_t>(x));
}

double nearest_prime_power_distance(double x) {
  if (!std::isfinite(x) || x <= 1.0) fail(ErrorCode::precondition, "nearest_prime_power_distance: x must exceed 1");
  auto pps = prime_powers_up_to(static_cast<std::uint64_t>(std::ceil(2.0 * x)) + 2);
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t q : pps) {
    double d = std::fabs(static_cast<double>(q) - x);
    if (d == 0.0) continue;
    best = std::min(best, d);
  }
  return best;
}

double gonek_error_budget(double x, double T) {
  double d = nearest_prime_power_distance(x);
  double lx = std::log(x);
  return x * std::log(2.0 * x * T) * std::log(std::log(3.0 * x)) + lx * std::min(T, x / d) +
         std::log(2.0 * T) * std::min(T, 1.0 / lx);
}

GonekReport gonek_sum(const ZeroCache& cache, double x) {
  if (!std::isfinite(x) || x <= 1.0) fail(ErrorCode::precondition, "gonek_sum: x must exceed 1");
  if (cache.empty()) fail(ErrorCode::empty, "gonek_sum: empty cache");
  GonekReport r;
  r.x = x;
  r.t_max = cache.t_max;
  const double T = cache.t_max;
  long double lx_l = std::log(static_cast<long double>(x));
  detail::LogPair lg{static_cast<double>(lx_l), static_cast<double>(lx_l - static_cast<double>(lx_l))};
  KahanSumC acc;
  for (const ZeroRecord& z : cache.records) {
    double ph = detail::reduce_phase(z.gamma, lg);
    acc.add(Complex(std::cos(ph), std::sin(ph)));
  }
  r.empirical_sum = std::sqrt(x) * acc.value();
  r.main_term = -T / Constants::two_pi * mangoldt_real(x);
  r.nearest_pp_distance = nearest_prime_power_distance(x);
  r.error_budget = gonek_error_budget(x, T);
  r.fitted_constant = std::abs(r.empirical_sum - r.main_term) / r.error_budget;
  r.zeros_used = static_cast<long>(cache.size());
  return r;
}

MeanSquareReport mean_square_over_zeros(const ZeroCache& cache, std::span<const Complex> coeffs, Complex alpha) {
  if (cache.empty()) fail(ErrorCode::empty, "mean_square_over_zeros: empty cache");
  const double T = cache.t_max;
  const double xi = static_cast<double>(coeffs.size());
  if (xi < 3.0 || xi > T / std::log(T))
    fail(ErrorCode::precondition, "mean_square_over_zeros: requires 3 <= xi <= T/log T");
  if (!(alpha.real() >= 0.0)) fail(ErrorCode::precondition, "mean_square_over_zeros: requires Re alpha >= 0");

  const std::size_t n_terms = coeffs.size();
  const auto& logs = detail::log_table(n_terms);
  // b_n = a_n n^{-1/2-alpha}; the zero enters through n^{-i gamma}.
  std::vector<Complex> b(n_terms);
  double m_xi = 1.0;
  KahanSum abs_over_n;
  for (std::size_t i = 0; i < n_terms; ++i) {
    const std::size_t n = i + 1;
    const double L = logs[n].hi;
    double ph = detail::reduce_phase(alpha.imag(), logs[n]);
    b[i] = coeffs[i] * std::exp(-(0.5 + alpha.real()) * L) * Complex(std::cos(ph), -std::sin(ph));
    m_xi = std::max(m_xi, std::abs(coeffs[i]));
    abs_over_n.add(std::abs(coeffs[i]) / static_cast<double>(n));
  }

  std::vector<double> per_zero(cache.size());
  parallel_for(cache.size(), [&](std::size_t z) {
    const double g = cache.records[z].gamma;
    KahanSumC acc;
    for (std::size_t i = 0; i < n_terms; ++i) {
      if (b[i] == Complex(0.0)) continue;
      double ph = detail::reduce_phase(g, logs[i + 1]);
      acc.add(b[i] * Complex(std::cos(ph), -std::sin(ph)));
    }
    per_zero[z] = std::norm(acc.value());
  }, 32);

  MeanSquareReport r;
  r.xi = xi;
  r.alpha = alpha;
  r.t_max = T;
  r.lhs = compensated_sum(per_zero);
  r.m_xi = m_xi;
  r.coeff_abs_sum = abs_over_n.value();
  r.rhs_scale = m_xi * T * std::log(T) * r.coeff_abs_sum;
  r.ratio = r.lhs > 0.0 ? r.lhs / r.rhs_scale : 0.0;
  r.zeros_used = static_cast<long>(cache.size());
  return r;
}

namespace {

double density(double y, double gamma1) {
  double a = std::fabs(y);
  return a >= gamma1 ? std::log(a / Constants::two_pi) / Constants::two_pi : 0.0;
}

}  // namespace

FSumReport f_sum(const ZeroCache& cache, Complex s, double window) {
  const double d = s.real() - 0.5, t = s.imag();
  if (!(d > 0.0) || !std::isfinite(t)) fail(ErrorCode::precondition, "f_sum: requires sigma > 1/2");
  if (!(window > 0.0)) fail(ErrorCode::precondition, "f_sum: window must be positive");
  if (cache.t_max < std::fabs(t) + window)
    fail(ErrorCode::insufficient_cache, "f_sum: cache must cover |t| + window");

  FSumReport r;
  KahanSum win;
  long used = 0;
  for (const ZeroRecord& z : cache.records) {
    for (double g : {-z.gamma, z.gamma}) {
      double u = t - g;
      if (std::fabs(u) > window) continue;
      win.add(d / (d * d + u * u));
      ++used;
    }
  }
  r.window_part = win.value();
  r.zeros_used = used;

  const double gamma1 = cache.empty() ? 14.134725141734693 : cache.records.front().gamma;
  auto f = [&](double u) { return d / (d * d + u * u) * (density(t + u, gamma1) + density(t - u, gamma1)); };
  std::vector<double> cuts{window};
  for (double c : {gamma1 - t, -gamma1 - t, t - gamma1, t + gamma1})
    if (c > window) cuts.push_back(c);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  KahanSum tail;
  boost::math::quadrature::tanh_sinh<double> ts;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) tail.add(ts.integrate(f, cuts[i], cuts[i + 1]));
  boost::math::quadrature::exp_sinh<double> es;
  double c0 = cuts.back();
  tail.add(es.integrate([&](double v) { return f(c0 + v); }, 0.0, std::numeric_limits<double>::infinity()));
  r.tail_part = tail.value();
  r.total = r.window_part + r.tail_part;
  return r;
}

}  // namespace zm
