#include "zetamoments/zeros.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <limits>
#include <optional>

#include "zetamoments/constants.hpp"
#include "zetamoments/error.hpp"
#include "zetamoments/parallel.hpp"
#include "zetamoments/version.hpp"
#include "zetamoments/zeta.hpp"

namespace zm {

namespace {

constexpr double scan_start = 10.0;
constexpr double initial_step = 0.05;
constexpr double min_step = 1e-4;
constexpr double em_polish_limit = 2000.0;

double scan_z(double t) { return hardy_z(t).value.real(); }

EvalResult polish_z(double t) { return t < em_polish_limit ? hardy_z_em(t) : hardy_z_rs(t); }

struct Refined {
  double gamma;
  double residual;
};

// Illinois iteration on a sign-change bracket.
Refined refine(double a, double b, double tol) {
  EvalResult ra = polish_z(a), rb = polish_z(b);
  double fa = ra.value.real(), fb = rb.value.real();
  auto (*eval)(double) -> EvalResult = polish_z;
  if (!(fa * fb < 0.0)) {
    // The polishing route disagrees with the scan at an endpoint; stay on
    // the scan route for this bracket.
    eval = hardy_z;
    ra = eval(a);
    rb = eval(b);
    fa = ra.value.real();
    fb = rb.value.real();
    if (fa == 0.0) return {a, ra.abs_error};
    if (fb == 0.0) return {b, rb.abs_error};
    if (!(fa * fb < 0.0)) fail(ErrorCode::internal, "refine: bracket lost its sign change");
  }
  double best_t = std::fabs(fa) < std::fabs(fb) ? a : b;
  EvalResult best = std::fabs(fa) < std::fabs(fb) ? ra : rb;
  int last = 0;
  for (int it = 0; it < 200; ++it) {
    double c = b - fb * (b - a) / (fb - fa);
    if (!(c > a && c < b)) c = 0.5 * (a + b);
    EvalResult rc = eval(c);
    double fc = rc.value.real();
    if (std::fabs(fc) < std::fabs(best.value.real())) {
      best = rc;
      best_t = c;
    }
    if (std::fabs(fc) <= tol || fc == 0.0) break;
    if ((fc < 0.0) == (fa < 0.0)) {
      a = c;
      fa = fc;
      if (last == -1) fb *= 0.5;
      last = -1;
    } else {
      b = c;
      fb = fc;
      if (last == 1) fa *= 0.5;
      last = 1;
    }
    if (b - a <= 8.0 * std::numeric_limits<double>::epsilon() * b) break;
  }
  return {best_t, std::max(std::fabs(best.value.real()), best.abs_error)};
}

struct GramNode {
  double t;
  long index;  // -1 for the virtual start
  double z;
  bool good;
};

struct BlockResult {
  std::vector<Refined> zeros;
  bool repaired = false;
  std::vector<int> per_interval;
};

BlockResult scan_block(const std::vector<GramNode>& nodes, std::size_t lo, std::size_t hi, double tol) {
  const long expected = nodes[hi].index - nodes[lo].index;
  for (double step = initial_step; step >= min_step * 0.999; step *= 0.5) {
    std::vector<std::pair<double, double>> brackets;
    std::vector<int> per_interval;
    for (std::size_t g = lo; g < hi; ++g) {
      double a = nodes[g].t, b = nodes[g + 1].t;
      int m = std::max(1, static_cast<int>(std::ceil((b - a) / step)));
      double prev_t = a, prev_z = nodes[g].z;
      int found = 0;
      for (int i = 1; i <= m; ++i) {
        double t = i == m ? b : a + (b - a) * static_cast<double>(i) / m;
        double z = i == m ? nodes[g + 1].z : scan_z(t);
        if ((prev_z < 0.0) != (z < 0.0) && prev_z != 0.0) {
          brackets.emplace_back(prev_t, t);
          ++found;
        }
        prev_t = t;
        prev_z = z;
      }
      per_interval.push_back(found);
    }
    long count = static_cast<long>(brackets.size());
    if (count == expected) {
      BlockResult out;
      out.repaired = step < initial_step;
      out.per_interval = std::move(per_interval);
      out.zeros.reserve(brackets.size());
      for (auto& [a, b] : brackets) out.zeros.push_back(refine(a, b, tol));
      return out;
    }
    if (count > expected) break;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "sweep: unresolved Gram block on [%.17g, %.17g] (expected %ld zeros)", nodes[lo].t,
                nodes[hi].t, expected);
  fail(ErrorCode::unresolved_block, buf);
}

std::string utc_now() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ZeroCache sweep(double t_max, double refine_tol) {
  if (!std::isfinite(t_max) || t_max <= 0.0 || t_max > 1e5)
    fail(ErrorCode::precondition, "sweep: t_max must be in (0, 1e5]");
  if (!(refine_tol >= 1e-12) || refine_tol > max_residual)
    fail(ErrorCode::precondition, "sweep: refine_tol must be in [1e-12, 1e-9]");

  ZeroCache cache;
  cache.t_max = t_max;
  cache.meta.tool_version = version_string;
  cache.meta.refine_tol = refine_tol;
  cache.meta.created = utc_now();

  // Gram points g_0..g_M where g_M is the first good one at or beyond t_max.
  std::vector<GramNode> nodes;
  nodes.push_back({scan_start, -1, scan_z(scan_start), true});
  if (t_max > scan_start) {
    long n = 0;
    for (;;) {
      std::size_t batch = 64;
      std::vector<GramNode> chunk(batch);
      parallel_for(batch, [&](std::size_t i) {
        long idx = n + static_cast<long>(i);
        double g = gram_point(idx);
        double z = scan_z(g);
        chunk[i] = {g, idx, z, (idx % 2 == 0 ? z : -z) > 0.0};
      }, 4);
      bool done = false;
      for (auto& nd : chunk) {
        nodes.push_back(nd);
        if (nd.good && nd.t >= t_max) {
          done = true;
          break;
        }
      }
      if (done) break;
      n += static_cast<long>(batch);
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0, start = 0; i + 1 < nodes.size(); ++i) {
    if (nodes[i + 1].good) {
      blocks.emplace_back(start, i + 1);
      start = i + 1;
    }
  }

  std::vector<BlockResult> results(blocks.size());
  parallel_for(blocks.size(), [&](std::size_t b) {
    results[b] = scan_block(nodes, blocks[b].first, blocks[b].second, refine_tol);
  }, 8);

  long index = 0;
  long repaired = 0, gram_one = 0, gram_total = 0, simple_blocks = 0, counted_blocks = 0;
  for (std::size_t b = 0; b < results.size(); ++b) {
    if (results[b].repaired) ++repaired;
    if (nodes[blocks[b].first].index >= 0 && nodes[blocks[b].second].t <= t_max) {
      ++counted_blocks;
      if (blocks[b].second - blocks[b].first == 1) ++simple_blocks;
    }
    for (std::size_t g = 0; g < results[b].per_interval.size(); ++g) {
      // Only genuine Gram intervals [g_n, g_{n+1}] with g_{n+1} <= t_max.
      const GramNode& left = nodes[blocks[b].first + g];
      const GramNode& right = nodes[blocks[b].first + g + 1];
      if (left.index < 0 || right.t > t_max) continue;
      ++gram_total;
      if (results[b].per_interval[g] == 1) ++gram_one;
    }
    for (const Refined& r : results[b].zeros) {
      if (r.gamma > t_max) continue;
      cache.records.push_back({++index, r.gamma, r.residual});
    }
  }
  cache.meta.extra["blocks"] = std::to_string(blocks.size());
  cache.meta.extra["repaired_blocks"] = std::to_string(repaired);
  cache.meta.extra["gram_intervals"] = std::to_string(gram_total);
  cache.meta.extra["gram_block_fraction"] =
      num(counted_blocks ? static_cast<double>(simple_blocks) / counted_blocks : 1.0);
  cache.meta.extra["gram_law_fraction"] = num(gram_total ? static_cast<double>(gram_one) / gram_total : 1.0);
  validate_cache(cache);
  return cache;
}

CountAudit count_audit(const ZeroCache& cache) {
  CountAudit a;
  const double T = cache.t_max;
  if (!(T > 0.0)) fail(ErrorCode::precondition, "count_audit: t_max must be positive");
  a.t_max = T;
  a.n_found = static_cast<long>(cache.size());
  double u = T / Constants::two_pi;
  a.main_term = u * std::log(u) - u;
  a.theta_count = T >= 10.0 ? theta(T) / Constants::pi + 1.0 : 0.0;
  a.deviation_theta = static_cast<double>(a.n_found) - a.theta_count;
  a.deviation_main = static_cast<double>(a.n_found) - a.main_term;
  return a;
}

void validate_cache(const ZeroCache& cache) {
  if (!std::isfinite(cache.t_max) || cache.t_max <= 0.0) fail(ErrorCode::invariant, "cache: t_max must be positive");
  double prev = 0.0;
  for (std::size_t i = 0; i < cache.records.size(); ++i) {
    const ZeroRecord& r = cache.records[i];
    std::string where = " at index " + std::to_string(r.index);
    if (r.index != static_cast<long>(i + 1)) fail(ErrorCode::invariant, "cache: indices not contiguous from 1" + where);
    if (!std::isfinite(r.gamma) || r.gamma <= 14.0) fail(ErrorCode::invariant, "cache: gamma must exceed 14" + where);
    if (i > 0 && !(r.gamma > prev)) fail(ErrorCode::invariant, "cache: gammas not strictly increasing" + where);
    if (r.gamma > cache.t_max) fail(ErrorCode::invariant, "cache: gamma beyond t_max" + where);
    if (!(r.residual >= 0.0) || r.residual > max_residual)
      fail(ErrorCode::invariant, "cache: residual outside [0, 1e-9]" + where);
    prev = r.gamma;
  }
}

}  // namespace zm
