#pragma once

#include <complex>

namespace zm {

using Complex = std::complex<double>;

// Principal branch of log Gamma (cut along the nonpositive real axis).
// Throws ErrorCode::pole for z on the nonpositive real axis.
Complex log_gamma(Complex z);

// Gamma'/Gamma.
Complex digamma(Complex z);

namespace detail {
using ComplexL = std::complex<long double>;
ComplexL log_gamma_l(ComplexL z);
}  // namespace detail

}  // namespace zm
