#pragma once

#include <complex>
#include <vector>

#include "zetamoments/gamma.hpp"

namespace zm {

enum class Method { euler_maclaurin, riemann_siegel, reflection };

const char* method_name(Method m) noexcept;

struct EvalResult {
  Complex value;
  double abs_error = 0.0;
  Method method = Method::euler_maclaurin;
};

// Supported region: sigma >= -1 with |t| <= 1.5e5. Near the real axis
// (|t| <= 1) the direct route also covers -6 <= sigma < -1.
EvalResult zeta(Complex s);
EvalResult zeta_prime(Complex s);
// zeta'/zeta; throws ErrorCode::near_zero when |zeta(s)| < 1e-12.
EvalResult log_deriv(Complex s);
// 2^s pi^{s-1} Gamma(1-s) sin(pi s / 2), for -1 <= sigma <= 2, |t| >= 1.
EvalResult chi(Complex s);

// Riemann-Siegel theta, t >= 10.
double theta(double t);
double theta_prime(double t);
// Solution of theta(g) = n pi, n >= 0.
double gram_point(long n);

// Z(t) = e^{i theta(t)} zeta(1/2 + it). Uses Riemann-Siegel for t >= 200.
EvalResult hardy_z(double t);
EvalResult hardy_z_em(double t);
EvalResult hardy_z_rs(double t);

// Taylor coefficients c_j = zeta^{(j)}(s) / j!, j = 0..order, from the
// differentiated Euler-Maclaurin formula (direct route only).
struct ZetaJet {
  Complex center;
  std::vector<Complex> coeffs;
  std::vector<double> abs_error;
  // Quantities used to bound the Taylor tail beyond `order`.
  double log_n_max = 0.0;
  double weight_sum = 0.0;
};

ZetaJet zeta_jet(Complex s, int order);

// Truncated Taylor expansion of zeta around a center, valid on |h| <= radius.
class LocalExpansion {
 public:
  static constexpr int default_order = 28;
  static constexpr double default_radius = 0.3;

  LocalExpansion() = default;
  explicit LocalExpansion(Complex center, int order = default_order, double radius = default_radius);

  Complex center() const { return jet_.center; }
  double radius() const { return radius_; }
  int order() const { return static_cast<int>(jet_.coeffs.size()) - 1; }

  // zeta(center + h) for |h| <= radius.
  EvalResult eval(Complex h) const;
  // zeta^{(ell)}(center).
  EvalResult derivative(int ell) const;

 private:
  ZetaJet jet_;
  double radius_ = default_radius;
  double tail_ = 0.0;
};

}  // namespace zm
