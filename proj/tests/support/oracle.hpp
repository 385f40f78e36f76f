#pragma once

// Independent reference implementations used only by the tests. They share
// no code with the library and favour simplicity over speed.

#include <complex>
#include <cstdint>

namespace oracle {

using CL = std::complex<long double>;

// Euler-Maclaurin in long double with `factor` times the library's term
// count and 20 Bernoulli corrections. Valid for sigma > -1 away from s = 1.
CL zeta(CL s, int factor = 4);

// Five-point central difference of oracle::zeta.
CL zeta_prime_fd(CL s, long double h = 1e-3L);

// Principal log Gamma by upward recurrence and Stirling's series.
CL log_gamma(CL z);

// Im log Gamma(1/4 + it/2) - (t/2) log pi.
long double theta(long double t);

// Re(e^{i theta(t)} zeta(1/2 + it)).
long double hardy_z(long double t);

// Bisection of oracle::hardy_z on [a, b] (opposite signs) to width tol.
long double bisect_zero(long double a, long double b, long double tol = 1e-13L);

// Count of sign changes of oracle::hardy_z on (a, b] with grid step h.
long sign_changes(long double a, long double b, long double h);

// Lambda(n) by trial division.
long double mangoldt_trial(std::uint64_t n);

// Smoothed polynomial evaluated by a direct loop at sigma + it.
CL dirichlet_brute(long double x, long double sigma, long double t, bool prime_only);

// 2^s pi^{s-1} Gamma(1-s) sin(pi s/2).
CL chi(CL s);

}  // namespace oracle
