#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "internal.hpp"
#include "phase.hpp"
#include "zetamoments/error.hpp"
#include "zetamoments/zeta.hpp"

namespace zm {

namespace {

using CL = std::complex<long double>;
constexpr long double pi_l = 3.141592653589793238462643383279502884L;
constexpr long double two_pi_l = 6.283185307179586476925286766559005768L;
constexpr int taylor_degree = 80;
constexpr int cauchy_points = 256;
constexpr int n_corrections = 5;

CL psi(CL p) { return std::cos(two_pi_l * (p * p - p - 1.0L / 16.0L)) / std::cos(two_pi_l * p); }

// Correction polynomials C_0..C_4 in h = p - 1/2.
struct Corrections {
  std::array<std::vector<long double>, n_corrections> poly;
};

const Corrections& corrections() {
  static const Corrections c = [] {
    // Taylor coefficients of psi around 1/2 from a Cauchy integral on |h| = 1.
    std::vector<long double> a(taylor_degree + 1, 0.0L);
    std::vector<CL> samples(cauchy_points);
    for (int k = 0; k < cauchy_points; ++k) {
      long double ang = two_pi_l * k / cauchy_points;
      samples[k] = psi(0.5L + CL(std::cos(ang), std::sin(ang)));
    }
    for (int m = 0; m <= taylor_degree; ++m) {
      CL acc = 0.0L;
      for (int k = 0; k < cauchy_points; ++k) {
        long double ang = -two_pi_l * static_cast<long double>(m) * k / cauchy_points;
        acc += samples[k] * CL(std::cos(ang), std::sin(ang));
      }
      a[m] = acc.real() / cauchy_points;
    }
    // d-th derivative of psi as a polynomial in h.
    auto deriv = [&](int d) {
      std::vector<long double> out(taylor_degree + 1, 0.0L);
      for (int m = d; m <= taylor_degree; ++m) {
        long double f = 1.0L;
        for (int i = 0; i < d; ++i) f *= static_cast<long double>(m - i);
        out[m - d] = a[m] * f;
      }
      return out;
    };
    const long double p2 = pi_l * pi_l, p4 = p2 * p2, p6 = p4 * p2, p8 = p4 * p4;
    struct Term {
      int k, d;
      long double w;
    };
    const Term terms[] = {
        {0, 0, 1.0L},
        {1, 3, -1.0L / (96.0L * p2)},
        {2, 2, 1.0L / (64.0L * p2)},
        {2, 6, 1.0L / (18432.0L * p4)},
        {3, 1, -1.0L / (64.0L * p2)},
        {3, 5, -1.0L / (3840.0L * p4)},
        {3, 9, -1.0L / (5308416.0L * p6)},
        {4, 0, 1.0L / (128.0L * p2)},
        {4, 4, 19.0L / (24576.0L * p4)},
        {4, 8, 11.0L / (5898240.0L * p6)},
        {4, 12, 1.0L / (2038431744.0L * p8)},
    };
    Corrections out;
    for (auto& p : out.poly) p.assign(taylor_degree + 1, 0.0L);
    for (const Term& tm : terms) {
      auto d = deriv(tm.d);
      for (int m = 0; m <= taylor_degree; ++m) out.poly[tm.k][m] += tm.w * d[m];
    }
    return out;
  }();
  return c;
}

long double horner(const std::vector<long double>& c, long double h) {
  long double v = 0.0L;
  for (std::size_t i = c.size(); i-- > 0;) v = v * h + c[i];
  return v;
}

}  // namespace

EvalResult hardy_z_rs(double t) {
  if (!std::isfinite(t) || t < 100.0) fail(ErrorCode::domain, "hardy_z_rs: requires t >= 100");
  if (t > 1.5e5) fail(ErrorCode::domain, "hardy_z_rs: t > 1.5e5");
  const long double tl = t;
  const long double a = std::sqrt(tl / two_pi_l);
  const long N = static_cast<long>(std::floor(a));
  const long double p = a - static_cast<long double>(N);
  const long double th = detail::theta_long(t);
  const auto& logs = detail::log_table(static_cast<std::size_t>(N) + 1);

  long double sum = 0.0L, abs_sum = 0.0L;
  for (long n = 1; n <= N; ++n) {
    long double lg = static_cast<long double>(logs[n].hi) + static_cast<long double>(logs[n].lo);
    double ph = detail::reduce_angle(th - tl * lg);
    long double w = 1.0L / std::sqrt(static_cast<long double>(n));
    sum += w * std::cos(static_cast<long double>(ph));
    abs_sum += w;
  }
  sum *= 2.0L;

  const auto& c = corrections();
  const long double h = p - 0.5L;
  const long double u = std::sqrt(two_pi_l / tl);
  long double corr = 0.0L, up = 1.0L;
  for (int k = 0; k < n_corrections; ++k) {
    corr += horner(c.poly[k], h) * up;
    up *= u;
  }
  long double pre = std::sqrt(u);
  long double rem = pre * corr * ((N - 1) % 2 == 0 ? 1.0L : -1.0L);
  double value = static_cast<double>(sum + rem);

  constexpr double eps = std::numeric_limits<double>::epsilon();
  double x = t / (2.0 * 3.14159265358979323846);
  double trunc = 1e-3 * std::pow(x, -2.75);
  double rounding = 8.0 * eps * static_cast<double>(abs_sum) * 2.0 + 1e-18 * t * std::log(t) * 2.0 * static_cast<double>(abs_sum);
  return {value, trunc + rounding + 4.0 * eps * std::fabs(value), Method::riemann_siegel};
}

}  // namespace zm
