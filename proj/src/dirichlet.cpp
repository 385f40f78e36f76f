#include "zetamoments/dirichlet.hpp"

#include <cmath>
#include <string>

#include "phase.hpp"
#include "zetamoments/error.hpp"
#include "zetamoments/primes.hpp"
#include "zetamoments/summation.hpp"

namespace zm {

void DirichletPolySpec::validate() const {
  if (!std::isfinite(x) || x < 2.0) fail(ErrorCode::precondition, "DirichletPolySpec: x must be >= 2");
  if (x > static_cast<double>(SieveTable::default_limit))
    fail(ErrorCode::domain, "DirichletPolySpec: x beyond the sieve table");
  if (!std::isfinite(lambda) || lambda < 0.0) fail(ErrorCode::precondition, "DirichletPolySpec: lambda must be >= 0");
  if (split_z && (!std::isfinite(*split_z) || *split_z < 2.0 || *split_z > x))
    fail(ErrorCode::precondition, "DirichletPolySpec: split_z must lie in [2, x]");
}

bool DirichletPolySpec::lemma_range_ok() const {
  return x >= 2.0 && lambda >= Constants::lambda0 && lambda <= std::log(x) / 4.0;
}

double DirichletPolySpec::sigma_lambda() const { return 0.5 + lambda / std::log(x); }

void DirichletPolynomial::add_term(std::uint64_t n, double coeff) {
  if (n == 0 || (!n_.empty() && n <= n_.back()))
    fail(ErrorCode::precondition, "DirichletPolynomial: terms must be added with increasing n >= 1");
  long double l = std::log(static_cast<long double>(n));
  double hi = static_cast<double>(l);
  n_.push_back(n);
  coeff_.push_back(coeff);
  log_hi_.push_back(hi);
  log_lo_.push_back(static_cast<double>(l - hi));
}

Complex DirichletPolynomial::eval(Complex s) const {
  const double sigma = s.real(), t = s.imag();
  KahanSumC acc;
  constexpr std::size_t chunk = 32;
  for (std::size_t lo = 0; lo < n_.size(); lo += chunk) {
    std::size_t hi = std::min(n_.size(), lo + chunk);
    Complex part = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      if (coeff_[i] == 0.0) continue;
      double mag = coeff_[i] * std::exp(-sigma * log_hi_[i]);
      double ph = detail::reduce_phase(t, {log_hi_[i], log_lo_[i]});
      part += Complex(mag * std::cos(ph), -mag * std::sin(ph));
    }
    acc.add(part);
  }
  return acc.value();
}

double DirichletPolynomial::abs_sum(double sigma) const {
  KahanSum acc;
  for (std::size_t i = 0; i < n_.size(); ++i) acc.add(std::fabs(coeff_[i]) * std::exp(-sigma * log_hi_[i]));
  return acc.value();
}

DirichletPolynomial smoothed_polynomial(const DirichletPolySpec& spec, double lo, double hi) {
  spec.validate();
  hi = std::min(hi, spec.x);
  DirichletPolynomial poly;
  if (hi < 2.0) return poly;
  auto sv = shared_sieve(static_cast<std::uint32_t>(std::floor(hi)));
  const double log_x = std::log(spec.x);
  std::uint64_t first = lo < 1.0 ? 1 : static_cast<std::uint64_t>(std::floor(lo)) + 1;
  std::uint64_t last = static_cast<std::uint64_t>(std::floor(hi));
  for (std::uint64_t n = std::max<std::uint64_t>(first, 2); n <= last; ++n) {
    std::uint32_t m = static_cast<std::uint32_t>(n);
    double c = spec.prime_only ? (sv->is_prime(m) ? 1.0 : 0.0) : sv->mangoldt_over_log(m);
    if (c == 0.0) continue;
    poly.add_term(n, c * std::log(spec.x / static_cast<double>(n)) / log_x);
  }
  return poly;
}

namespace {

Complex eval_split(const DirichletPolySpec& spec, Complex s) {
  if (spec.split_z) {
    double z = *spec.split_z;
    return smoothed_polynomial(spec, 0.0, z).eval(s) + smoothed_polynomial(spec, z, spec.x).eval(s);
  }
  return smoothed_polynomial(spec, 0.0, spec.x).eval(s);
}

DirichletPolySpec primes_of(const DirichletPolySpec& spec) {
  DirichletPolySpec p = spec;
  p.prime_only = true;
  return p;
}

}  // namespace

Complex smoothed_sum_at(const DirichletPolySpec& spec, Complex s) { return eval_split(spec, s); }

Complex prime_sum_at(const DirichletPolySpec& spec, Complex s) { return eval_split(primes_of(spec), s); }

Complex smoothed_sum(const DirichletPolySpec& spec, Complex s) {
  spec.validate();
  return eval_split(spec, Complex(spec.sigma_lambda(), s.imag()));
}

Complex prime_sum(const DirichletPolySpec& spec, Complex s) {
  spec.validate();
  return eval_split(primes_of(spec), Complex(spec.sigma_lambda(), s.imag()));
}

std::pair<Complex, Complex> s1_s2(const DirichletPolySpec& spec, double gamma) {
  spec.validate();
  if (!spec.split_z) fail(ErrorCode::precondition, "s1_s2: split_z is required");
  DirichletPolySpec p = primes_of(spec);
  Complex s(spec.sigma_lambda(), gamma);
  double z = *spec.split_z;
  return {smoothed_polynomial(p, 0.0, z).eval(s), smoothed_polynomial(p, z, spec.x).eval(s)};
}

}  // namespace zm
