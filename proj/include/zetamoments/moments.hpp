#pragma once

#include <vector>

#include "zetamoments/gamma.hpp"
#include "zetamoments/zeros.hpp"
#include "zetamoments/zeta.hpp"

namespace zm {

// Local Taylor expansions of zeta around every cached zero.
class ZeroNeighborhoods {
 public:
  ZeroNeighborhoods() = default;
  explicit ZeroNeighborhoods(const ZeroCache& cache, int order = LocalExpansion::default_order,
                             double radius = LocalExpansion::default_radius);

  const ZeroCache& cache() const { return cache_; }
  std::size_t size() const { return expansions_.size(); }
  double t_max() const { return cache_.t_max; }
  double radius() const { return radius_; }
  const LocalExpansion& at(std::size_t i) const { return expansions_[i]; }

 private:
  ZeroCache cache_;
  std::vector<LocalExpansion> expansions_;
  double radius_ = LocalExpansion::default_radius;
};

struct MomentReport {
  double k = 0.0;
  int ell = 0;
  Complex alpha;
  double t_max = 0.0;
  double raw_sum = 0.0;    // compensated, ascending gamma
  double naive_sum = 0.0;  // plain left-to-right sum of the same terms
  double normalized = 0.0;
  long count = 0;
  double conjectured_exponent = 0.0;
  double ratio_to_conjecture = 0.0;
  double max_term = 0.0;
  double abs_error = 0.0;
  // Terms at alpha = 0, ell = 0 that vanish to within the cache residual.
  long vanishing_terms = 0;
};

// |zeta^{(ell)}(rho)| for every cached zero.
std::vector<double> derivative_abs_values(const ZeroCache& cache, int ell, std::vector<double>* errors = nullptr);
std::vector<double> derivative_abs_values(const ZeroNeighborhoods& nb, int ell, std::vector<double>* errors = nullptr);
// |zeta(rho + alpha)| for every cached zero.
std::vector<double> shifted_abs_values(const ZeroCache& cache, Complex alpha, std::vector<double>* errors = nullptr);
std::vector<double> shifted_abs_values(const ZeroNeighborhoods& nb, Complex alpha, std::vector<double>* errors = nullptr);

// k > 0, ell in {0, 1, 2}. ell = 1 is J_k(T).
MomentReport compute_Jk(const ZeroCache& cache, double k, int ell);
MomentReport compute_Jk(const ZeroNeighborhoods& nb, double k, int ell);

// |alpha| <= 1, |Re alpha| <= 1/log T, k > 0.
MomentReport shifted_moment(const ZeroCache& cache, double k, Complex alpha);
MomentReport shifted_moment(const ZeroNeighborhoods& nb, double k, Complex alpha);

bool admissible_shift(Complex alpha, double t_max);

struct CauchyTransferReport {
  int k = 0;
  int ell = 0;
  double R = 0.0;
  int n_samples = 0;
  double lhs = 0.0;             // sum |zeta^{(ell)}(rho)|^{2k}
  double prefactor = 0.0;       // (ell!/R^ell)^{2k}
  double max_shifted_sum = 0.0;  // max over sampled alpha of sum |zeta(rho+alpha)|^{2k}
  double rhs_sampled = 0.0;
  Complex argmax_alpha;
  double slack = 0.0;  // rhs_sampled / lhs
  bool passed = false;
  long alphas_sampled = 0;
};

constexpr double cauchy_sampling_tolerance = 0.05;

// Samples n_samples points on |alpha| = R and on 4 interior rings.
CauchyTransferReport cauchy_transfer_audit(const ZeroNeighborhoods& nb, int k, int ell, double R, int n_samples);
CauchyTransferReport cauchy_transfer_audit(const ZeroCache& cache, int k, int ell, double R, int n_samples);

struct ContinuousMomentReport {
  double k = 0.0;
  double t_max = 0.0;
  double step = 0.0;
  double t_start = 1.0;
  long intervals = 0;
  double integral = 0.0;  // over [t_start, T]
  double value = 0.0;     // integral / T
};

// (1/T) int_1^T |zeta(1/2+it)|^{2k} dt by composite Simpson, step <= 0.01.
ContinuousMomentReport continuous_moment(double k, double t_max, double step);

}  // namespace zm
