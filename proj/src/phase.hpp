#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace zm::detail {

// log n stored as an unevaluated double pair hi + lo.
struct LogPair {
  double hi;
  double lo;
};

// Lazily built table of log n for 1 <= n <= limit (index 0 unused).
const std::vector<LogPair>& log_table(std::size_t limit);

inline void two_product(double a, double b, double& p, double& e) {
  constexpr double split = 134217729.0;
  p = a * b;
  double as = split * a;
  double ah = as - (as - a);
  double al = a - ah;
  double bs = split * b;
  double bh = bs - (bs - b);
  double bl = b - bh;
  e = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
}

// t * (hi + lo) reduced into roughly [-pi, pi].
inline double reduce_phase(double t, const LogPair& lg) {
  constexpr double c1 = 6.2831853069365025;
  constexpr double c2 = 2.4308402025215864e-10;
  constexpr double c3 = 8.0890649951838025e-21;
  constexpr double inv = 0.15915494309189535;
  double p, e;
  two_product(t, lg.hi, p, e);
  double k = std::nearbyint(p * inv);
  double r = ((p - k * c1) - k * c2) - k * c3;
  return r + (e + t * lg.lo);
}

// Reduce a long double angle; the split constants make k * c1 and k * c2 exact.
inline double reduce_angle(long double a) {
  constexpr long double c1 = 6.2831853069365025L;
  constexpr long double c2 = 2.4308402025215864e-10L;
  constexpr long double c3 = 8.0890649951838025e-21L;
  long double k = std::nearbyintl(a * 0.15915494309189533576888L);
  return static_cast<double>(((a - k * c1) - k * c2) - k * c3);
}

}  // namespace zm::detail
