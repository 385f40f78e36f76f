#pragma once

#include <cstdint>

namespace zm {

inline double radical_inverse(std::uint64_t i, unsigned base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

// Two-dimensional Halton sequence (bases 2 and 3); the seed selects a
// disjoint stretch of the sequence.
class Halton2 {
 public:
  explicit Halton2(std::uint64_t seed) : next_(1 + seed * 1000003ULL % 4000000007ULL) {}
  void next(double& u, double& v) {
    u = radical_inverse(next_, 2);
    v = radical_inverse(next_, 3);
    ++next_;
  }

 private:
  std::uint64_t next_;
};

}  // namespace zm
