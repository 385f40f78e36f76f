#include <cmath>
#include <random>

#include "doctest.h"
#include "../support/oracle.hpp"
#include "zetamoments/constants.hpp"
#include "zetamoments/error.hpp"
#include "zetamoments/gamma.hpp"
#include "zetamoments/zeta.hpp"

using namespace zm;

namespace {

constexpr double pi = 3.14159265358979323846;

Complex to_d(oracle::CL z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

}  // namespace

TEST_CASE("constants") {
  CHECK(std::fabs(std::exp(-Constants::lambda0) - Constants::lambda0) < 1e-14);
  CHECK(std::fabs(Constants::B - (std::log(2 * pi) - 1 - 2 * Constants::euler_gamma0)) < 1e-15);
  CHECK(Constants::delta0_reference == doctest::Approx(0.4912).epsilon(1e-3));
}

TEST_CASE("zeta closed forms") {
  CHECK(std::abs(zeta({2, 0}).value - Complex(pi * pi / 6, 0)) < 1e-14);
  CHECK(std::abs(zeta({0, 0}).value - Complex(-0.5, 0)) < 1e-14);
  CHECK(std::abs(zeta({-1, 0}).value - Complex(-1.0 / 12, 0)) < 1e-13);
  CHECK(std::abs(zeta({0.5, 0}).value - Complex(-1.4603545088095868, 0)) < 1e-13);
  CHECK(zeta({2, 0}).method == Method::euler_maclaurin);
}

TEST_CASE("zeta errors") {
  CHECK(code_of([] { zeta({1, 0}); }) == ErrorCode::pole);
  CHECK(code_of([] { zeta({-3, 10}); }) == ErrorCode::domain);
  CHECK(code_of([] { zeta({0.5, 2e5}); }) == ErrorCode::domain);
}

TEST_CASE("zeta near the first zero against the oracle") {
  Complex s(0.5, 14.0);
  EvalResult r = zeta(s);
  Complex ref = to_d(oracle::zeta({0.5L, 14.0L}));
  CHECK(std::abs(r.value - ref) <= r.abs_error + 1e-15);
  CHECK(std::abs(r.value) < 0.2);
  CHECK(r.abs_error <= 1e-9);
}

TEST_CASE("zeta error estimates dominate the oracle on random points") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> sig(0.5, 2.0), tt(0.0, 1e4);
  int failures = 0;
  double worst_est = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Complex s(sig(rng), tt(rng));
    EvalResult r = zeta(s);
    Complex ref = to_d(oracle::zeta({s.real(), s.imag()}));
    double dev = std::abs(r.value - ref);
    if (dev > r.abs_error + 2e-16 * std::abs(ref)) ++failures;
    worst_est = std::max(worst_est, r.abs_error);
  }
  CHECK(failures == 0);
  CHECK(worst_est <= 1e-9);
}

TEST_CASE("zeta_prime") {
  Complex s(2, 3);
  Complex h(1e-5, 0);
  Complex fd = (zeta(s + h).value - zeta(s - h).value) / (2e-5);
  CHECK(std::abs(zeta_prime(s).value - fd) <= 1e-6);

  // zeta'(-2) = -zeta(3) / (4 pi^2)
  const double zeta3 = 1.2020569031595942;
  CHECK(std::abs(zeta_prime({-2, 0}).value - Complex(-zeta3 / (4 * pi * pi), 0)) < 1e-12);

  const double g1 = 14.134725141734693;
  EvalResult d = zeta_prime({0.5, g1});
  Complex ref = to_d(oracle::zeta_prime_fd({0.5L, static_cast<long double>(g1)}));
  CHECK(std::abs(d.value) > 0.5);
  CHECK(std::abs(d.value - ref) <= d.abs_error + 1e-10);
  CHECK(d.abs_error <= 1e-8);
}

TEST_CASE("conjugation symmetry is exact") {
  for (Complex s : {Complex(0.5, 123.4), Complex(0.8, 5000.1), Complex(-0.5, 30.0)}) {
    CHECK(zeta(std::conj(s)).value == std::conj(zeta(s).value));
    CHECK(zeta_prime(std::conj(s)).value == std::conj(zeta_prime(s).value));
  }
}

TEST_CASE("log_deriv") {
  // -zeta'/zeta(2) = sum Lambda(n)/n^2
  long double acc = 0.0L;
  for (std::uint64_t n = 2; n <= 200000; ++n) acc += oracle::mangoldt_trial(n) / (static_cast<long double>(n) * n);
  double tail = std::log(2e5) / 2e5 * 1.1;
  CHECK(std::fabs(-log_deriv({2, 0}).value.real() - static_cast<double>(acc)) <= tail + 1e-12);

  Complex s4(4, 0);
  Complex q = zeta_prime(s4).value / zeta(s4).value;
  CHECK(std::abs(log_deriv(s4).value - q) < 1e-14);

  EvalResult r = log_deriv({0.5, 14.134725141734693 + 0.5});
  CHECK(std::isfinite(r.value.real()));
  CHECK(std::isfinite(r.value.imag()));
}

TEST_CASE("theta and Gram points") {
  double prev = theta(10.0);
  for (double t = 10.05; t < 2000; t += 0.37) {
    double v = theta(t);
    CHECK(v > prev);
    prev = v;
  }
  for (double t : {10.0, 14.13, 100.0, 1000.0, 9999.5}) {
    CHECK(std::fabs(theta(t) - static_cast<double>(oracle::theta(t))) < 1e-10 * std::max(1.0, std::fabs(theta(t))));
  }
  double g0 = gram_point(0);
  CHECK(g0 > 17.0);
  CHECK(g0 < 18.0);
  CHECK(std::fabs(theta(g0)) < 1e-12);
  CHECK(code_of([] { theta(9.0); }) == ErrorCode::domain);
}

TEST_CASE("hardy_z") {
  double t = 100.0;
  Complex rot = std::polar(1.0, theta(t)) * zeta({0.5, t}).value;
  CHECK(std::fabs(rot.imag()) < 1e-8);

  EvalResult z50 = hardy_z(50.0);
  CHECK(std::fabs(std::fabs(z50.value.real()) - std::abs(zeta({0.5, 50.0}).value)) <= z50.abs_error);

  CHECK(hardy_z(14.0).value.real() * hardy_z(14.2).value.real() < 0.0);

  CHECK(std::fabs(hardy_z_rs(1000.0).value.real() - hardy_z_em(1000.0).value.real()) < 1e-6);
  CHECK(std::fabs(hardy_z(1000.0).value.real() - static_cast<double>(oracle::hardy_z(1000.0L))) < 1e-6);
  CHECK(hardy_z(1000.0).method == Method::riemann_siegel);
}

TEST_CASE("chi") {
  CHECK(std::fabs(std::abs(chi({0.5, 500}).value) - 1.0) < 1e-8);
  Complex s(0.7, 300);
  Complex fe = zeta(s).value - chi(s).value * zeta(1.0 - s).value;
  CHECK(std::abs(fe) < 1e-8);
  double dev = std::abs(chi({0.6, 100}).value) / std::pow(100 / (2 * pi), -0.1) - 1.0;
  CHECK(std::fabs(dev) <= 0.02);
  Complex ref = to_d(oracle::chi({0.3L, 77.7L}));
  CHECK(std::abs(chi({0.3, 77.7}).value - ref) < 1e-12 * std::abs(ref));
}

TEST_CASE("functional equation on a random grid") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> sig(0.0, 1.0), tt(10.0, 1000.0);
  int bad = 0;
  for (int i = 0; i < 100; ++i) {
    Complex s(sig(rng), tt(rng));
    EvalResult a = zeta(s), c = chi(s), b = zeta(1.0 - s);
    double budget = a.abs_error + std::abs(c.value) * b.abs_error + c.abs_error * std::abs(b.value) + 1e-15;
    if (std::abs(a.value - c.value * b.value) > budget) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("log_gamma and digamma") {
  CHECK(std::abs(log_gamma({5, 0}) - Complex(std::log(24.0), 0)) < 1e-14);
  CHECK(std::abs(log_gamma({0.5, 0}) - Complex(0.5 * std::log(pi), 0)) < 1e-14);
  for (Complex z : {Complex(1.5, 2.0), Complex(3.0, -40.0), Complex(0.1, 700.0), Complex(25.0, 0.5)}) {
    Complex ref = to_d(oracle::log_gamma({z.real(), z.imag()}));
    CHECK(std::abs(log_gamma(z) - ref) < 1e-12 * std::max(1.0, std::abs(ref)));
  }
  Complex s(10, 10);
  CHECK(std::abs(digamma(s) - (std::log(s) - 0.5 / s)) <= 1.0 / std::norm(s));
  CHECK(code_of([] { log_gamma({-2, 0}); }) == ErrorCode::pole);
}

TEST_CASE("local expansion matches direct evaluation") {
  LocalExpansion le(Complex(0.5, 1234.5));
  for (Complex h : {Complex(0.01, 0), Complex(-0.05, 0.2), Complex(0, -0.25)}) {
    EvalResult d = zeta(le.center() + h);
    CHECK(std::abs(le.eval(h).value - d.value) <= le.eval(h).abs_error + d.abs_error);
  }
  CHECK(std::abs(le.derivative(1).value - zeta_prime(le.center()).value) < 1e-9);
}
