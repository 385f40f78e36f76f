#include "zetamoments/gamma.hpp"

#include <cmath>

#include "zetamoments/error.hpp"

namespace zm {

namespace {

// B_{2k} / (2k (2k-1)), k = 1..12
constexpr long double stirling_coeff[] = {
    1.0L / 12.0L,
    -1.0L / 360.0L,
    1.0L / 1260.0L,
    -1.0L / 1680.0L,
    1.0L / 1188.0L,
    -691.0L / 360360.0L,
    1.0L / 156.0L,
    -3617.0L / 122400.0L,
    43867.0L / 244188.0L,
    -174611.0L / 125400.0L,
    77683.0L / 5796.0L,
    -236364091.0L / 1506960.0L,
};

// B_{2k} / (2k), k = 1..12
constexpr double digamma_coeff[] = {
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
    43867.0 / 14364.0,
    -174611.0 / 6600.0,
    77683.0 / 276.0,
    -236364091.0 / 65520.0,
};

constexpr long double half_log_two_pi_l = 0.91893853320467274178032973640562L;

bool on_pole_axis(double re, double im) { return im == 0.0 && re <= 0.0; }

}  // namespace

namespace detail {

ComplexL log_gamma_l(ComplexL z) {
  if (on_pole_axis(static_cast<double>(z.real()), static_cast<double>(z.imag())))
    fail(ErrorCode::pole, "log_gamma: argument on the nonpositive real axis");
  ComplexL shift = 0.0L;
  while (z.real() < 0.5L || std::abs(z) < 15.0L) {
    shift += std::log(z);
    z += 1.0L;
  }
  ComplexL inv = 1.0L / z;
  ComplexL inv2 = inv * inv;
  ComplexL series = 0.0L;
  ComplexL p = inv;
  for (long double c : stirling_coeff) {
    series += c * p;
    p *= inv2;
  }
  return (z - 0.5L) * std::log(z) - z + half_log_two_pi_l + series - shift;
}

}  // namespace detail

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    fail(ErrorCode::domain, "log_gamma: non-finite argument");
  auto r = detail::log_gamma_l(detail::ComplexL(z.real(), z.imag()));
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

Complex digamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    fail(ErrorCode::domain, "digamma: non-finite argument");
  if (on_pole_axis(z.real(), z.imag()) && z.real() == std::floor(z.real()))
    fail(ErrorCode::pole, "digamma: pole at a nonpositive integer");
  Complex shift = 0.0;
  while (z.real() < 0.5 || std::abs(z) < 15.0) {
    shift += 1.0 / z;
    z += 1.0;
  }
  Complex inv = 1.0 / z;
  Complex inv2 = inv * inv;
  Complex series = 0.0;
  Complex p = inv2;
  for (double c : digamma_coeff) {
    series += c * p;
    p *= inv2;
  }
  return std::log(z) - 0.5 * inv - series - shift;
}

}  // namespace zm
