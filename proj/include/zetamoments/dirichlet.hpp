#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zetamoments/constants.hpp"
#include "zetamoments/gamma.hpp"

namespace zm {

struct DirichletPolySpec {
  double x = 2.0;
  double lambda = Constants::lambda0;
  bool prime_only = false;
  std::optional<double> split_z;

  // x >= 2 (and within the sieve), lambda >= 0, 2 <= split_z <= x.
  void validate() const;
  // lambda0 <= lambda <= log(x)/4, the range the majorant lemmas assume.
  bool lemma_range_ok() const;
  double sigma_lambda() const;
};

// Finite sum of c_n n^{-s}.
class DirichletPolynomial {
 public:
  void add_term(std::uint64_t n, double coeff);
  Complex eval(Complex s) const;
  // sum |c_n| n^{-sigma}
  double abs_sum(double sigma) const;
  std::size_t size() const { return n_.size(); }

 private:
  std::vector<std::uint64_t> n_;
  std::vector<double> coeff_;
  std::vector<double> log_hi_;
  std::vector<double> log_lo_;
};

// Terms with lo < n <= hi of the smoothed polynomial for `spec`, with
// coefficient Lambda(n)/log n (or the prime indicator when prime_only)
// times log(x/n)/log x.
DirichletPolynomial smoothed_polynomial(const DirichletPolySpec& spec, double lo, double hi);

// Evaluated at sigma_lambda + i Im(s).
Complex smoothed_sum(const DirichletPolySpec& spec, Complex s);
Complex prime_sum(const DirichletPolySpec& spec, Complex s);
// Evaluated at s itself.
Complex smoothed_sum_at(const DirichletPolySpec& spec, Complex s);
Complex prime_sum_at(const DirichletPolySpec& spec, Complex s);

// (S_1, S_2) at 1/2 + i gamma with the sigma_lambda shift; requires split_z.
std::pair<Complex, Complex> s1_s2(const DirichletPolySpec& spec, double gamma);

}  // namespace zm
