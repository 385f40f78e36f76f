#pragma once

namespace zm::detail {

// theta(t) without the domain check, in extended precision.
long double theta_long(double t);

}  // namespace zm::detail
