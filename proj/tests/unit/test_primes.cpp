#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "../support/oracle.hpp"
#include "zetamoments/constants.hpp"
#include "zetamoments/dirichlet.hpp"
#include "zetamoments/error.hpp"
#include "zetamoments/primes.hpp"

using namespace zm;

TEST_CASE("mangoldt values") {
  CHECK(mangoldt(8) == doctest::Approx(std::log(2.0)));
  CHECK(mangoldt(6) == 0.0);
  CHECK(mangoldt(1) == 0.0);
  CHECK(mangoldt(97) == doctest::Approx(std::log(97.0)));
  double psi = 0.0;
  long double ref = 0.0L;
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    psi += mangoldt(n);
    ref += oracle::mangoldt_trial(n);
  }
  CHECK(std::fabs(psi - static_cast<double>(ref)) < 1e-10);
  CHECK(psi == doctest::Approx(996.6).epsilon(1e-3));
}

TEST_CASE("sieve agrees with trial division") {
  SieveTable s(200000);
  for (std::uint32_t n = 1; n <= 200000; ++n) {
    double a = s.mangoldt(n);
    double b = static_cast<double>(oracle::mangoldt_trial(n));
    if (std::fabs(a - b) > 1e-12) FAIL("mismatch at n = " << n);
  }
  CHECK_THROWS_AS(s.mangoldt(200001), Error);
}

TEST_CASE("standard estimates") {
  double acc = 0.0;
  for (std::uint64_t m = 1; m <= 1000000; ++m) {
    acc += mangoldt(m) / static_cast<double>(m);
    if ((m & (m - 1)) == 0 || m % 99991 == 0) CHECK(acc <= std::log(static_cast<double>(m)) + 2.0);
  }
  auto sieve = shared_sieve(1000000);
  for (double z : {10.0, 100.0, 1000.0}) {
    double sum = 0.0;
    for (auto p : sieve->primes())
      if (p > z && p <= 1000000) sum += 1.0 / p;
    CHECK(std::fabs(sum - (std::log(std::log(1e6)) - std::log(std::log(z)))) <= 0.5);
  }
}

TEST_CASE("smoothed sums") {
  DirichletPolySpec x2{2.0, Constants::lambda0, false, std::nullopt};
  CHECK(std::abs(smoothed_sum(x2, {0, 7})) == 0.0);

  DirichletPolySpec x10{10.0, Constants::lambda0, false, std::nullopt};
  Complex v = smoothed_sum(x10, {0, 0});
  auto ref = oracle::dirichlet_brute(10.0L, x10.sigma_lambda(), 0.0L, false);
  CHECK(v.real() > 0.0);
  CHECK(std::fabs(v.imag()) < 1e-15);
  CHECK(std::fabs(v.real() - static_cast<double>(ref.real())) < 1e-14);

  DirichletPolySpec x3{3.0, Constants::lambda0, true, std::nullopt};
  double w = std::log(1.5) / std::log(3.0);
  Complex expect = w * std::exp(-Complex(x3.sigma_lambda(), 0.0) * std::log(2.0));
  CHECK(std::abs(prime_sum(x3, {0, 0}) - expect) < 1e-15);
}

TEST_CASE("smoothed sums match the brute-force loop") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> xs(2.0, 3000.0), ts(-2000.0, 2000.0), ls(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    DirichletPolySpec spec{xs(rng), ls(rng), (i % 2) == 1, std::nullopt};
    double t = ts(rng);
    Complex v = smoothed_sum(spec, {0, t});
    auto ref = oracle::dirichlet_brute(spec.x, spec.sigma_lambda(), t, spec.prime_only);
    double scale = smoothed_polynomial(spec, 0.0, spec.x).abs_sum(spec.sigma_lambda());
    double dev = std::abs(v - Complex(static_cast<double>(ref.real()), static_cast<double>(ref.imag())));
    worst = std::max(worst, dev / std::max(scale, 1e-300));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("prime sums at t = 0 decrease in lambda") {
  double prev = INFINITY;
  for (double lambda = 0.0; lambda <= 1.15; lambda += 0.05) {
    DirichletPolySpec spec{100.0, lambda, true, std::nullopt};
    double v = prime_sum(spec, {0, 0}).real();
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("split identity and S2") {
  DirichletPolySpec spec{500.0, Constants::lambda0, true, 12.0};
  for (double g : {14.134725141734693, 101.3, 499.9}) {
    auto [s1, s2] = s1_s2(spec, g);
    DirichletPolySpec whole = spec;
    whole.split_z.reset();
    Complex w = prime_sum(whole, {0, g});
    CHECK(std::abs(s1 + s2 - w) <= 1e-13 * std::max(1.0, std::abs(w)));
  }
  DirichletPolySpec equal{500.0, Constants::lambda0, true, 500.0};
  CHECK(s1_s2(equal, 50.0).second == Complex(0, 0));
  DirichletPolySpec bad{500.0, Constants::lambda0, true, 600.0};
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("prime-only versus weighted difference at x = 1e4") {
  DirichletPolySpec full{1e4, Constants::lambda0, false, std::nullopt};
  DirichletPolySpec primes{1e4, Constants::lambda0, true, std::nullopt};
  double diff = std::abs(smoothed_sum(full, {0, 50}) - prime_sum(primes, {0, 50}));
  double tau = 50.0 + std::exp(30.0);
  double C = diff / std::log(std::log(std::log(tau)));
  MESSAGE("fitted constant " << C);
  CHECK(std::isfinite(C));
  CHECK(C <= 10.0);
}
