#pragma once

#include <span>

#include "zetamoments/gamma.hpp"
#include "zetamoments/zeros.hpp"

namespace zm {

struct GonekReport {
  double x = 0.0;
  double t_max = 0.0;
  Complex empirical_sum;       // sum_{0<gamma<=T} x^rho
  double main_term = 0.0;      // -(T/2pi) Lambda(x)
  double error_budget = 0.0;   // the three error terms with constant 1
  double nearest_pp_distance = 0.0;
  double fitted_constant = 0.0;  // |empirical - main| / error_budget
  long zeros_used = 0;
};

// Lambda(x) for real x: log p when x is an integer power of p, else 0.
double mangoldt_real(double x);
// Distance from x to the nearest prime power other than x itself.
double nearest_prime_power_distance(double x);
double gonek_error_budget(double x, double T);

GonekReport gonek_sum(const ZeroCache& cache, double x);

struct MeanSquareReport {
  double xi = 0.0;
  Complex alpha;
  double t_max = 0.0;
  double lhs = 0.0;
  double rhs_scale = 0.0;
  double ratio = 0.0;
  double m_xi = 0.0;
  double coeff_abs_sum = 0.0;  // sum |a_n| / n
  long zeros_used = 0;
};

// coeffs[i] is a_{i+1}; xi = coeffs.size(). Requires 3 <= xi <= T/log T and
// Re alpha >= 0.
MeanSquareReport mean_square_over_zeros(const ZeroCache& cache, std::span<const Complex> coeffs, Complex alpha);

struct FSumReport {
  double total = 0.0;
  double window_part = 0.0;
  double tail_part = 0.0;
  long zeros_used = 0;
};

constexpr double default_f_window = 50.0;

// F(s) = sum_rho (sigma-1/2)/((sigma-1/2)^2 + (t-gamma)^2) over zeros with
// |gamma - t| <= window (both signs of gamma), plus a density tail.
FSumReport f_sum(const ZeroCache& cache, Complex s, double window = default_f_window);

}  // namespace zm
