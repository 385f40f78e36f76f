#pragma once

namespace zm {

struct Constants {
  static constexpr double pi = 3.14159265358979323846;
  static constexpr double two_pi = 6.28318530717958647692;
  static constexpr double log_two_pi = 1.83787706640934548356;
  static constexpr double euler_gamma0 = 0.57721566490153286061;
  // log 2pi - 1 - 2 gamma0
  static constexpr double B = -0.31655426339372023765;
  // e^{-lambda0} = lambda0
  static constexpr double lambda0 = 0.56714329040978387300;
  // e^{-delta0} = delta0 + delta0^2/2, kept for reference only
  static constexpr double delta0_reference = 0.49122518354447387972;
};

}  // namespace zm
