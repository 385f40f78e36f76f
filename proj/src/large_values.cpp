#include "zetamoments/large_values.hpp"

#include <algorithm>
#include <cmath>

#include "zetamoments/error.hpp"
#include "zetamoments/summation.hpp"

namespace zm {

namespace {

struct Scales {
  double LL, L3;
};

Scales scales(double T) {
  if (!(T > 16.0)) fail(ErrorCode::precondition, "large values: T must exceed 16 so that log log log T > 0");
  double LL = std::log(std::log(T));
  return {LL, std::log(LL)};
}

}  // namespace

const char* vd_case_name(VdCase c) noexcept {
  switch (c) {
    case VdCase::below_range: return "below_range";
    case VdCase::case_i: return "i";
    case VdCase::case_ii: return "ii";
    case VdCase::case_iii: return "iii";
  }
  return "unknown";
}

double vd_parameter_A(double T, double V) {
  auto [LL, L3] = scales(T);
  if (V <= LL) return 0.5 * L3;
  if (V <= 0.5 * LL * L3) return LL / (2.0 * V) * L3;
  return 1.0;
}

double lemma_vd_case_bound(VdCase c, double T, double V, double n_zeros, double constant) {
  auto [LL, L3] = scales(T);
  switch (c) {
    case VdCase::case_i:
      return constant * n_zeros * V / std::sqrt(LL) * std::exp(-V * V / LL * (1.0 - 4.0 / L3));
    case VdCase::case_ii:
      return constant * n_zeros * V / std::sqrt(LL) * std::exp(-V * V / LL * (1.0 - 4.0 * V / (LL * L3)));
    case VdCase::case_iii:
      return constant * n_zeros * std::exp(-V / 201.0 * std::log(V));
    case VdCase::below_range:
      return n_zeros;
  }
  return n_zeros;
}

VdParams lemma_vd(double T, double V, double n_zeros, double constant) {
  auto [LL, L3] = scales(T);
  VdParams p;
  p.V = V;
  p.A = vd_parameter_A(T, V);
  p.x = std::min(std::sqrt(T), std::pow(T, p.A / V));
  p.z = std::pow(p.x, 1.0 / LL);
  p.V1 = V * (1.0 - 9.0 / (10.0 * p.A));
  p.V2 = V / (10.0 * p.A);
  if (V >= std::sqrt(LL) && V <= LL)
    p.vd_case = VdCase::case_i;
  else if (V >= LL && V <= 0.5 * LL * L3)
    p.vd_case = VdCase::case_ii;
  else if (V > 0.5 * LL * L3)
    p.vd_case = VdCase::case_iii;
  else
    p.vd_case = VdCase::below_range;
  p.bound = lemma_vd_case_bound(p.vd_case, T, V, n_zeros, constant);
  return p;
}

double vd_vacuity_threshold(double T) {
  auto [LL, L3] = scales(T);
  (void)L3;
  return 0.4 * std::log(T) / LL;
}

long count_large_values(std::span<const double> log_values, double V) {
  long c = 0;
  for (double v : log_values)
    if (v >= V) ++c;
  return c;
}

std::vector<double> default_v_grid(double max_log_value) {
  double top = std::isfinite(max_log_value) ? std::max(4.0, std::ceil(max_log_value)) : 4.0;
  if (top == max_log_value) top += 1.0;
  std::vector<double> g;
  for (double v = 3.0; v <= top; v += 1.0) g.push_back(v);
  return g;
}

LargeValueHistogram histogram_from_values(std::span<const double> log_values, double t_max, Complex alpha,
                                          std::vector<double> V_grid, double k_hint, bool lemma_range) {
  auto [LL, L3] = scales(t_max);
  LargeValueHistogram h;
  h.total = static_cast<long>(log_values.size());
  for (double v : log_values) h.max_log_value = std::max(h.max_log_value, v);
  if (V_grid.empty()) V_grid = default_v_grid(h.max_log_value);
  for (std::size_t i = 0; i < V_grid.size(); ++i) {
    if (!std::isfinite(V_grid[i])) fail(ErrorCode::precondition, "large values: V grid must be finite");
    if (i > 0 && !(V_grid[i] > V_grid[i - 1])) fail(ErrorCode::precondition, "large values: V grid must be ascending");
  }
  if (lemma_range) {
    if (V_grid.front() < 3.0) fail(ErrorCode::precondition, "large values: every V must be >= 3");
    if (!admissible_shift(alpha, t_max))
      fail(ErrorCode::precondition, "large values: requires |alpha| <= 1 and |Re alpha| <= 1/log T");
  }
  LargeValueConfig& c = h.config;
  c.t_max = t_max;
  c.alpha = alpha;
  c.k_hint = k_hint;
  c.V_grid = V_grid;
  c.log_log_T = LL;
  c.log3_T = L3;
  c.vacuity_threshold = vd_vacuity_threshold(t_max);
  c.interval_split = 4.0 * k_hint * LL;
  for (double V : V_grid) {
    VdParams p = lemma_vd(t_max, V, static_cast<double>(h.total));
    c.params.push_back(p);
    h.counts.push_back(count_large_values(log_values, V));
    h.bound_values.push_back(p.bound);
  }
  return h;
}

namespace {

std::vector<double> log_abs(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::log(v[i]);
  return out;
}

}  // namespace

LargeValueHistogram large_value_histogram(const ZeroNeighborhoods& nb, double k_hint, Complex alpha,
                                          std::vector<double> V_grid) {
  if (nb.cache().empty()) fail(ErrorCode::empty, "large_value_histogram: empty cache");
  if (!admissible_shift(alpha, nb.t_max()))
    fail(ErrorCode::precondition, "large_value_histogram: requires |alpha| <= 1 and |Re alpha| <= 1/log T");
  auto logs = log_abs(shifted_abs_values(nb, alpha));
  return histogram_from_values(logs, nb.t_max(), alpha, std::move(V_grid), k_hint, true);
}

LargeValueHistogram large_value_histogram(const ZeroCache& cache, double k_hint, Complex alpha,
                                          std::vector<double> V_grid) {
  if (cache.empty()) fail(ErrorCode::empty, "large_value_histogram: empty cache");
  if (!admissible_shift(alpha, cache.t_max))
    fail(ErrorCode::precondition, "large_value_histogram: requires |alpha| <= 1 and |Re alpha| <= 1/log T");
  auto logs = log_abs(shifted_abs_values(cache, alpha));
  return histogram_from_values(logs, cache.t_max, alpha, std::move(V_grid), k_hint, true);
}

double histogram_moment_bound(const LargeValueHistogram& h, double k) {
  const auto& g = h.config.V_grid;
  if (g.empty()) fail(ErrorCode::precondition, "histogram_moment_bound: empty grid");
  if (h.counts.back() != 0)
    fail(ErrorCode::precondition, "histogram_moment_bound: grid does not cover the observed values");
  KahanSum s;
  s.add(std::exp(2.0 * k * g[0]) * static_cast<double>(h.total - h.counts[0]));
  for (std::size_t j = 1; j < g.size(); ++j)
    s.add(std::exp(2.0 * k * g[j]) * static_cast<double>(h.counts[j - 1] - h.counts[j]));
  return s.value();
}

double dyadic_reconstruction(const LargeValueHistogram& h, double k) {
  for (double v : h.config.V_grid)
    if (v != std::floor(v)) fail(ErrorCode::precondition, "dyadic_reconstruction: grid-not-integer");
  return histogram_moment_bound(h, k);
}

}  // namespace zm
