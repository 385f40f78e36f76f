#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace zm {

class SieveTable {
 public:
  static constexpr std::uint32_t default_limit = 10'000'000;

  explicit SieveTable(std::uint32_t limit = default_limit);

  std::uint32_t limit() const { return limit_; }
  std::uint32_t smallest_prime_factor(std::uint32_t n) const;
  bool is_prime(std::uint32_t n) const;
  // Lambda(n); throws ErrorCode::domain outside [1, limit].
  double mangoldt(std::uint32_t n) const;
  // Lambda(n) / log n, i.e. 1/k for n = p^k and 0 otherwise.
  double mangoldt_over_log(std::uint32_t n) const;
  // If n = p^k returns p and sets k, otherwise returns 0.
  std::uint32_t prime_power_base(std::uint32_t n, int* k = nullptr) const;
  const std::vector<std::uint32_t>& primes() const { return primes_; }

 private:
  void check(std::uint32_t n) const;

  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

// Process-wide table with limit >= min_limit (at most the default limit).
std::shared_ptr<const SieveTable> shared_sieve(std::uint32_t min_limit);

double mangoldt(std::uint64_t n);

// Sorted prime powers p^k <= limit.
std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t limit);

}  // namespace zm
