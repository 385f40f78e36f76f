#pragma once

#include <span>
#include <string>
#include <vector>

#include "zetamoments/gamma.hpp"
#include "zetamoments/moments.hpp"

namespace zm {

enum class VdCase { below_range, case_i, case_ii, case_iii };

const char* vd_case_name(VdCase c) noexcept;

// Parameters of the large-value lemma at height T and level V.
struct VdParams {
  double V = 0.0;
  double A = 0.0;
  double x = 0.0;   // min(T^{1/2}, T^{A/V})
  double z = 0.0;   // x^{1/log log T}
  double V1 = 0.0;  // V (1 - 9/(10A))
  double V2 = 0.0;  // V / (10A)
  VdCase vd_case = VdCase::below_range;
  double bound = 0.0;  // the matching case bound with the given constant
};

double vd_parameter_A(double T, double V);
// Case (i), (ii) or (iii) bound for #S_alpha(T;V) with implied constant `constant`.
double lemma_vd_case_bound(VdCase c, double T, double V, double n_zeros, double constant = 1.0);
// Case chosen by the range V falls in; below the range the trivial bound N.
VdParams lemma_vd(double T, double V, double n_zeros, double constant = 1.0);
// (2/5) log T / log log T
double vd_vacuity_threshold(double T);

struct LargeValueConfig {
  double t_max = 0.0;
  Complex alpha;
  double k_hint = 1.0;
  std::vector<double> V_grid;
  std::vector<VdParams> params;
  double log_log_T = 0.0;
  double log3_T = 0.0;
  double vacuity_threshold = 0.0;
  // 4 k log log T, the split between the middle and upper ranges.
  double interval_split = 0.0;
};

struct LargeValueHistogram {
  LargeValueConfig config;
  std::vector<long> counts;  // #{gamma : log|zeta(rho+alpha)| >= V}
  std::vector<double> bound_values;
  long total = 0;  // N(T)
  double max_log_value = -std::numeric_limits<double>::infinity();
};

long count_large_values(std::span<const double> log_values, double V);
// Integers 3..ceil(max_log_value) (at least {3, 4}).
std::vector<double> default_v_grid(double max_log_value);

// When lemma_range is true the grid must satisfy V >= 3 and alpha the
// admissible-shift condition.
LargeValueHistogram histogram_from_values(std::span<const double> log_values, double t_max, Complex alpha,
                                          std::vector<double> V_grid, double k_hint = 1.0, bool lemma_range = true);

LargeValueHistogram large_value_histogram(const ZeroNeighborhoods& nb, double k_hint, Complex alpha,
                                          std::vector<double> V_grid);
LargeValueHistogram large_value_histogram(const ZeroCache& cache, double k_hint, Complex alpha,
                                          std::vector<double> V_grid);

// sum_nu e^{2k nu} [#S(nu-1) - #S(nu)] on an integer grid, with everything
// below the first grid point assigned to it. The grid must contain only
// integers and its last count must be 0.
double dyadic_reconstruction(const LargeValueHistogram& h, double k);
// The same upper sum on an arbitrary ascending grid.
double histogram_moment_bound(const LargeValueHistogram& h, double k);

}  // namespace zm
