#include "zetamoments/zeta.hpp"

#include <boost/math/special_functions/lambert_w.hpp>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "internal.hpp"
#include "phase.hpp"
#include "zetamoments/constants.hpp"
#include "zetamoments/error.hpp"
#include "zetamoments/summation.hpp"

namespace zm {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double max_height = 1.5e5;
constexpr std::size_t log_table_size = 100001;

// B_{2k} / (2k)!, k = 1..30
constexpr double bernoulli_scaled[30] = {
    0.083333333333333329,    -0.0013888888888888889,   3.3068783068783071e-05,  -8.2671957671957675e-07,
    2.08767569878681e-08,    -5.2841901386874932e-10,  1.3382536530684679e-11,  -3.3896802963225827e-13,
    8.5860620562778452e-15,  -2.1748686985580619e-16,  5.5090028283602295e-18,  -1.3954464685812522e-19,
    3.5347070396294673e-21,  -8.9535174270375463e-23,  2.2679524523376829e-24,  -5.7447906688722025e-26,
    1.455172475614865e-27,   -3.6859949406653103e-29,  9.3367342570950451e-31,  -2.36502241570063e-32,
    5.9906717624821341e-34,  -1.5174548844682903e-35,  3.8437581254541886e-37,  -9.7363530726466913e-39,
    2.4662470442006811e-40,  -6.2470767418207434e-42,  1.5824030244644914e-43,  -4.0082736859489357e-45,
    1.0153075855569557e-46,  -2.5718041582418717e-48,
};

std::string fmt(Complex s) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.17g%+.17gi)", s.real(), s.imag());
  return buf;
}

void check_finite(Complex s, const char* op) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    fail(ErrorCode::domain, std::string(op) + ": non-finite argument");
}

void check_zeta_domain(Complex s, const char* op) {
  check_finite(s, op);
  double sigma = s.real(), t = std::fabs(s.imag());
  if (std::abs(s - 1.0) < 1e-12) fail(ErrorCode::pole, std::string(op) + ": pole at s = 1");
  if (t > max_height) fail(ErrorCode::domain, std::string(op) + ": |t| > 1.5e5 at s = " + fmt(s));
  bool ok = sigma >= -1.0 || (t <= 1.0 && sigma >= -6.0);
  if (!ok) fail(ErrorCode::domain, std::string(op) + ": outside supported strip at s = " + fmt(s));
}

bool use_reflection(Complex s) { return s.real() < 0.0 && std::fabs(s.imag()) >= 1.0; }

using Jet = std::vector<Complex>;

// out = a * b truncated to a.size()
Jet jet_mul(const Jet& a, const Jet& b) {
  std::size_t n = a.size();
  Jet out(n, Complex(0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
  return out;
}

// q <- q * (a + h) / scale
void jet_mul_linear(Jet& q, Complex a, double scale) {
  for (std::size_t j = q.size(); j-- > 0;) {
    Complex v = a * q[j];
    if (j > 0) v += q[j - 1];
    q[j] = v / scale;
  }
}

double jet_norm(const Jet& a) {
  double s = 0.0;
  for (auto& c : a) s += std::abs(c);
  return s;
}

// Euler-Maclaurin jet for Im s >= 0.
ZetaJet em_jet_upper(Complex s, int order) {
  const std::size_t J = static_cast<std::size_t>(order) + 1;
  const double sigma = s.real(), t = s.imag();
  const std::size_t N = std::max<std::size_t>(20, static_cast<std::size_t>(std::ceil(2.0 * t / Constants::pi)));
  const auto& logs = detail::log_table(N);

  std::vector<KahanSumC> acc(J);
  std::vector<KahanSum> rnd(J);
  KahanSum weight;
  Jet blk(J);
  std::vector<double> blk_abs(J);
  std::vector<double> mag_j(J);
  constexpr std::size_t chunk = 32;
  const double phase_err = 2e-19 * t;

  for (std::size_t lo = 1; lo < N; lo += chunk) {
    std::size_t hi = std::min(N, lo + chunk);
    std::fill(blk.begin(), blk.end(), Complex(0.0));
    std::fill(blk_abs.begin(), blk_abs.end(), 0.0);
    double blk_w = 0.0;
    for (std::size_t n = lo; n < hi; ++n) {
      const double L = logs[n].hi;
      const double mag = std::exp(-sigma * L);
      const double ph = detail::reduce_phase(t, logs[n]);
      Complex w(mag * std::cos(ph), -mag * std::sin(ph));
      const double r = 8.0 * eps * (1.0 + L) + phase_err * L;
      double m = mag;
      blk_w += mag;
      for (std::size_t j = 0; j < J; ++j) {
        blk[j] += w;
        blk_abs[j] += m * r;
        double f = L / static_cast<double>(j + 1);
        w *= -f;
        m *= f;
      }
    }
    weight.add(blk_w);
    for (std::size_t j = 0; j < J; ++j) {
      acc[j].add(blk[j]);
      rnd[j].add(blk_abs[j]);
    }
  }

  // Terms built from N^{-s-h} = N^{-s} e^{-h log N}.
  const double LN = logs[N].hi;
  const double magN = std::exp(-sigma * LN);
  const double phN = detail::reduce_phase(t, logs[N]);
  const Complex baseN(magN * std::cos(phN), -magN * std::sin(phN));
  Jet E(J);
  {
    Complex e = baseN;
    for (std::size_t j = 0; j < J; ++j) {
      E[j] = e;
      e *= -LN / static_cast<double>(j + 1);
    }
  }

  // N^{1-s-h} / (s - 1 + h) + N^{-s-h} / 2
  Jet tail(J);
  {
    Complex a = s - 1.0;
    Jet g(J);
    Complex ga = 1.0 / a;
    for (std::size_t j = 0; j < J; ++j) {
      g[j] = ga;
      ga *= -1.0 / a;
    }
    Jet gt = jet_mul(E, g);
    for (std::size_t j = 0; j < J; ++j) tail[j] = static_cast<double>(N) * gt[j] + 0.5 * E[j];
  }

  // Bernoulli corrections sum_k b_k (s+h)_{2k-1} N^{1-2k} times N^{-s-h}.
  Jet P(J, Complex(0.0));
  Jet Q(J, Complex(0.0));
  Q[0] = 1.0;
  jet_mul_linear(Q, s, static_cast<double>(N));
  double total_norm = jet_norm(tail) + jet_norm(E);
  for (std::size_t j = 0; j < J; ++j) total_norm += std::abs(acc[j].value());
  Jet rem_term;
  int used = 0;
  for (int k = 1; k <= 30; ++k) {
    Jet term(J);
    for (std::size_t j = 0; j < J; ++j) term[j] = bernoulli_scaled[k - 1] * Q[j];
    Jet full = jet_mul(E, term);
    double nrm = jet_norm(full);
    if (k >= 2 && (nrm <= 1e-18 * total_norm || k == 30)) {
      rem_term = std::move(full);
      used = k - 1;
      break;
    }
    for (std::size_t j = 0; j < J; ++j) P[j] += term[j];
    jet_mul_linear(Q, s + static_cast<double>(2 * k - 1), static_cast<double>(N));
    jet_mul_linear(Q, s + static_cast<double>(2 * k), static_cast<double>(N));
  }
  Jet bern = jet_mul(E, P);

  ZetaJet out;
  out.center = s;
  out.coeffs.resize(J);
  out.abs_error.resize(J);
  const double m2 = 2.0 * used + 1.0;
  const double trunc_factor = 2.0 * std::abs(s + m2) / std::max(1.0, sigma + m2);
  for (std::size_t j = 0; j < J; ++j) {
    Complex v = acc[j].value() + tail[j] + bern[j];
    out.coeffs[j] = v;
    double e = rnd[j].value() + trunc_factor * std::abs(rem_term[j]);
    e += 8.0 * eps * (std::abs(tail[j]) + std::abs(bern[j]) + std::abs(v));
    out.abs_error[j] = e;
  }
  out.log_n_max = LN;
  out.weight_sum = weight.value() + magN * (1.0 + static_cast<double>(N) / std::abs(s - 1.0)) +
                   jet_norm(bern) + jet_norm(tail);
  return out;
}

ZetaJet em_jet(Complex s, int order) {
  if (s.imag() >= 0.0) return em_jet_upper(s, order);
  ZetaJet j = em_jet_upper(std::conj(s), order);
  j.center = s;
  for (auto& c : j.coeffs) c = std::conj(c);
  return j;
}

double chi_rel_error(Complex s) {
  double t = std::fabs(s.imag());
  return 8.0 * eps + 2e-18 * (1.0 + t) * (1.0 + std::log1p(t));
}

// log chi(s) in long double; the imaginary part is only meaningful mod 2 pi.
detail::ComplexL log_chi_l(Complex sd) {
  using CL = detail::ComplexL;
  const long double pi_l = 3.141592653589793238462643383279502884L;
  const long double log2_l = 0.693147180559945309417232121458176568L;
  const long double logpi_l = 1.144729885849400174143427351353058712L;
  CL s(sd.real(), sd.imag());
  CL w = s * (pi_l / 2.0L);
  CL log_sin;
  const CL i(0.0L, 1.0L);
  if (w.imag() > 1.0L) {
    log_sin = -i * w + std::log(i / 2.0L) + std::log(1.0L - std::exp(2.0L * i * w));
  } else if (w.imag() < -1.0L) {
    log_sin = i * w - std::log(2.0L * i) + std::log(1.0L - std::exp(-2.0L * i * w));
  } else {
    log_sin = std::log(std::sin(w));
  }
  return s * log2_l + (s - 1.0L) * logpi_l + detail::log_gamma_l(1.0L - s) + log_sin;
}

Complex chi_raw(Complex s) {
  auto lc = log_chi_l(s);
  double mod = std::exp(static_cast<double>(lc.real()));
  double ph = detail::reduce_angle(lc.imag());
  return {mod * std::cos(ph), mod * std::sin(ph)};
}

// chi'/chi(s)
Complex chi_log_deriv(Complex s) {
  Complex w = s * (Constants::pi / 2.0);
  return Complex(std::log(2.0) + std::log(Constants::pi)) - digamma(1.0 - s) + (Constants::pi / 2.0) / std::tan(w);
}

EvalResult direct_value(Complex s) {
  ZetaJet j = em_jet(s, 0);
  return {j.coeffs[0], j.abs_error[0], Method::euler_maclaurin};
}

long double theta_l(double td) {
  const long double t = td;
  const long double two_pi_l = 6.283185307179586476925286766559005768L;
  const long double pi_l = 3.141592653589793238462643383279502884L;
  long double it = 1.0L / t;
  long double it2 = it * it;
  long double corr = it * (1.0L / 48.0L +
                           it2 * (7.0L / 5760.0L +
                                  it2 * (31.0L / 80640.0L + it2 * (127.0L / 430080.0L + it2 * (511.0L / 1216512.0L)))));
  return t / 2.0L * std::log(t / two_pi_l) - t / 2.0L - pi_l / 8.0L + corr;
}

void check_theta_domain(double t, const char* op) {
  if (!std::isfinite(t) || t < 10.0) fail(ErrorCode::domain, std::string(op) + ": requires t >= 10");
  if (t > max_height) fail(ErrorCode::domain, std::string(op) + ": t > 1.5e5");
}

double theta_error(double t) { return 1e-13 + 4e-19 * t * std::log(t); }

}  // namespace

namespace detail {

long double theta_long(double t) { return theta_l(t); }

const std::vector<LogPair>& log_table(std::size_t limit) {
  static const std::vector<LogPair> table = [] {
    std::vector<LogPair> v(log_table_size);
    v[0] = {0.0, 0.0};
    for (std::size_t n = 1; n < log_table_size; ++n) {
      long double l = std::log(static_cast<long double>(n));
      double hi = static_cast<double>(l);
      v[n] = {hi, static_cast<double>(l - hi)};
    }
    return v;
  }();
  if (limit >= table.size()) fail(ErrorCode::domain, "log table exceeded");
  return table;
}

}  // namespace detail

const char* method_name(Method m) noexcept {
  switch (m) {
    case Method::euler_maclaurin: return "euler_maclaurin";
    case Method::riemann_siegel: return "riemann_siegel";
    case Method::reflection: return "reflection";
  }
  return "unknown";
}

ZetaJet zeta_jet(Complex s, int order) {
  check_zeta_domain(s, "zeta_jet");
  if (order < 0 || order > 64) fail(ErrorCode::precondition, "zeta_jet: order must be in [0, 64]");
  if (s.real() < -1.0) fail(ErrorCode::domain, "zeta_jet: requires sigma >= -1");
  return em_jet(s, order);
}

EvalResult zeta(Complex s) {
  check_zeta_domain(s, "zeta");
  if (!use_reflection(s)) return direct_value(s);
  Complex c = chi_raw(s);
  EvalResult z = direct_value(1.0 - s);
  Complex v = c * z.value;
  double err = std::abs(c) * z.abs_error + std::abs(v) * chi_rel_error(s) + 4.0 * eps * std::abs(v);
  return {v, err, Method::reflection};
}

EvalResult zeta_prime(Complex s) {
  check_zeta_domain(s, "zeta_prime");
  if (!use_reflection(s)) {
    ZetaJet j = em_jet(s, 1);
    return {j.coeffs[1], j.abs_error[1], Method::euler_maclaurin};
  }
  // zeta'(s) = chi(s) [ (chi'/chi)(s) zeta(1-s) - zeta'(1-s) ]
  Complex c = chi_raw(s);
  ZetaJet j = em_jet(1.0 - s, 1);
  Complex g = chi_log_deriv(s);
  Complex inner = g * j.coeffs[0] - j.coeffs[1];
  Complex v = c * inner;
  double err = std::abs(c) * (std::abs(g) * j.abs_error[0] + j.abs_error[1] +
                              1e-13 * std::abs(g) * std::abs(j.coeffs[0])) +
               std::abs(v) * chi_rel_error(s) + 8.0 * eps * std::abs(v);
  return {v, err, Method::reflection};
}

EvalResult log_deriv(Complex s) {
  check_zeta_domain(s, "log_deriv");
  EvalResult z, d;
  if (use_reflection(s)) {
    z = zeta(s);
    d = zeta_prime(s);
  } else {
    ZetaJet j = em_jet(s, 1);
    z = {j.coeffs[0], j.abs_error[0], Method::euler_maclaurin};
    d = {j.coeffs[1], j.abs_error[1], Method::euler_maclaurin};
  }
  double az = std::abs(z.value);
  if (az < 1e-12) fail(ErrorCode::near_zero, "log_deriv: |zeta(s)| < 1e-12 at s = " + fmt(s));
  Complex v = d.value / z.value;
  double err = (d.abs_error + std::abs(v) * z.abs_error) / std::max(az - z.abs_error, 0.5 * az) +
               4.0 * eps * std::abs(v);
  return {v, err, z.method};
}

EvalResult chi(Complex s) {
  check_finite(s, "chi");
  if (s.real() < -1.0 || s.real() > 2.0 || std::fabs(s.imag()) < 1.0 || std::fabs(s.imag()) > max_height)
    fail(ErrorCode::domain, "chi: requires -1 <= sigma <= 2 and 1 <= |t| <= 1.5e5");
  Complex v = chi_raw(s);
  return {v, std::abs(v) * chi_rel_error(s), Method::reflection};
}

double theta(double t) {
  check_theta_domain(t, "theta");
  return static_cast<double>(theta_l(t));
}

double theta_prime(double t) {
  check_theta_domain(t, "theta_prime");
  double it2 = 1.0 / (t * t);
  return 0.5 * std::log(t / Constants::two_pi) -
         it2 * (1.0 / 48.0 + it2 * (7.0 / 1920.0 + it2 * (31.0 / 16128.0 + it2 * (127.0 / 61440.0))));
}

double gram_point(long n) {
  if (n < 0) fail(ErrorCode::domain, "gram_point: index must be >= 0");
  double arg = (8.0 * static_cast<double>(n) + 1.0) / (8.0 * std::exp(1.0));
  double g = Constants::two_pi * std::exp(1.0 + boost::math::lambert_w0(arg));
  const long double target = static_cast<long double>(n) * 3.141592653589793238462643383279502884L;
  for (int it = 0; it < 50; ++it) {
    g = std::max(g, 10.0);
    double f = static_cast<double>(theta_l(g) - target);
    double step = f / theta_prime(g);
    g -= step;
    if (std::fabs(step) <= 2.0 * eps * g) break;
  }
  if (g > max_height) fail(ErrorCode::domain, "gram_point: beyond supported height");
  return g;
}

EvalResult hardy_z_em(double t) {
  check_theta_domain(t, "hardy_z");
  EvalResult z = direct_value(Complex(0.5, t));
  double ph = detail::reduce_angle(theta_l(t));
  Complex rot = Complex(std::cos(ph), std::sin(ph)) * z.value;
  double mod = std::abs(z.value);
  double err = z.abs_error + std::fabs(rot.imag()) + mod * (theta_error(t) + 4.0 * eps);
  return {std::copysign(mod, rot.real()), err, Method::euler_maclaurin};
}

EvalResult hardy_z(double t) {
  check_theta_domain(t, "hardy_z");
  if (t >= 200.0) return hardy_z_rs(t);
  return hardy_z_em(t);
}

LocalExpansion::LocalExpansion(Complex center, int order, double radius) : radius_(radius) {
  if (!(radius > 0.0) || radius > 0.5) fail(ErrorCode::precondition, "LocalExpansion: radius must be in (0, 0.5]");
  jet_ = zeta_jet(center, order);
}

EvalResult LocalExpansion::eval(Complex h) const {
  double r = std::abs(h);
  if (r > radius_ * (1.0 + 1e-12)) fail(ErrorCode::domain, "LocalExpansion: |h| exceeds radius");
  const int J = order();
  Complex v = jet_.coeffs[J];
  double err = jet_.abs_error[J];
  double absacc = std::abs(v);
  for (int j = J - 1; j >= 0; --j) {
    v = v * h + jet_.coeffs[j];
    err = err * r + jet_.abs_error[j];
    absacc = absacc * r + std::abs(jet_.coeffs[j]);
  }
  // Taylor tail: sum_{j > J} |c_j| r^j, with each piece of the formula
  // bounded by W (rL)^{J+1}/(J+1)! e^{rL}.
  double L = jet_.log_n_max + 2.0;
  double x = r * L;
  double tail = jet_.weight_sum * std::exp(static_cast<double>(J + 1) * std::log(std::max(x, 1e-300)) -
                                           std::lgamma(static_cast<double>(J + 2)) + x);
  err += tail + 8.0 * eps * absacc * (J + 1);
  return {v, err, Method::euler_maclaurin};
}

EvalResult LocalExpansion::derivative(int ell) const {
  if (ell < 0 || ell > order()) fail(ErrorCode::precondition, "LocalExpansion: derivative order out of range");
  double f = std::tgamma(static_cast<double>(ell + 1));
  return {f * jet_.coeffs[ell], f * jet_.abs_error[ell], Method::euler_maclaurin};
}

}  // namespace zm
