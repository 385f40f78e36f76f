#include "zetamoments/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include "zetamoments/error.hpp"

namespace zm {

SieveTable::SieveTable(std::uint32_t limit) : limit_(limit) {
  if (limit < 2) fail(ErrorCode::precondition, "SieveTable: limit must be >= 2");
  spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
  spf_[1] = 1;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = i;
      primes_.push_back(i);
    }
    for (std::uint32_t p : primes_) {
      std::uint64_t m = static_cast<std::uint64_t>(p) * i;
      if (p > spf_[i] || m > limit) break;
      spf_[m] = p;
    }
  }
}

void SieveTable::check(std::uint32_t n) const {
  if (n < 1 || n > limit_)
    fail(ErrorCode::domain, "sieve: " + std::to_string(n) + " outside table [1, " + std::to_string(limit_) + "]");
}

std::uint32_t SieveTable::smallest_prime_factor(std::uint32_t n) const {
  check(n);
  return spf_[n];
}

bool SieveTable::is_prime(std::uint32_t n) const {
  check(n);
  return n >= 2 && spf_[n] == n;
}

std::uint32_t SieveTable::prime_power_base(std::uint32_t n, int* k) const {
  check(n);
  if (n < 2) return 0;
  std::uint32_t p = spf_[n];
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return 0;
  if (k) *k = e;
  return p;
}

double SieveTable::mangoldt(std::uint32_t n) const {
  std::uint32_t p = prime_power_base(n);
  return p ? std::log(static_cast<double>(p)) : 0.0;
}

double SieveTable::mangoldt_over_log(std::uint32_t n) const {
  int k = 0;
  std::uint32_t p = prime_power_base(n, &k);
  return p ? 1.0 / k : 0.0;
}

std::shared_ptr<const SieveTable> shared_sieve(std::uint32_t min_limit) {
  static std::mutex mu;
  static std::shared_ptr<const SieveTable> table;
  if (min_limit > SieveTable::default_limit)
    fail(ErrorCode::domain, "sieve: requested limit " + std::to_string(min_limit) + " beyond " +
                                std::to_string(SieveTable::default_limit));
  std::lock_guard<std::mutex> lock(mu);
  if (!table || table->limit() < min_limit) {
    std::uint32_t lim = 1u << 16;
    while (lim < min_limit) lim *= 2;
    lim = std::min(lim, SieveTable::default_limit);
    table = std::make_shared<const SieveTable>(lim);
  }
  return table;
}

double mangoldt(std::uint64_t n) {
  if (n < 1 || n > SieveTable::default_limit)
    fail(ErrorCode::domain, "mangoldt: " + std::to_string(n) + " outside the sieve table");
  return shared_sieve(static_cast<std::uint32_t>(n))->mangoldt(static_cast<std::uint32_t>(n));
}

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  if (limit > SieveTable::default_limit) fail(ErrorCode::domain, "prime_powers_up_to: limit beyond the sieve table");
  auto sv = shared_sieve(static_cast<std::uint32_t>(limit));
  for (std::uint32_t p : sv->primes()) {
    if (p > limit) break;
    for (std::uint64_t q = p; q <= limit; q *= p) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace zm
