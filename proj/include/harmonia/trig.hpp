#pragma once

#include <cmath>
#include <numbers>

namespace harmonia {

// sin(pi*x) and cos(pi*x) with exact argument reduction modulo 2. The branch
// selection keeps full relative accuracy near the zeros, which the cot/tan
// weighted integrands rely on: their endpoint poles are cancelled by these
// factors, so a relative error there becomes an absolute error in the integrand.

inline double sinpi(double x) {
    const double r = std::remainder(x, 2.0);  // exact, r in [-1, 1]
    const double a = std::fabs(r);
    double s;
    if (a <= 0.25)
        s = std::sin(std::numbers::pi * a);
    else if (a < 0.75)
        s = std::cos(std::numbers::pi * (0.5 - a));  // 0.5 - a is exact here
    else
        s = std::sin(std::numbers::pi * (1.0 - a));  // 1 - a is exact here
    return r < 0.0 ? -s : s;
}

inline double cospi(double x) {
    const double a = std::fabs(std::remainder(x, 2.0));
    if (a <= 0.25) return std::cos(std::numbers::pi * a);
    if (a < 0.75) return std::sin(std::numbers::pi * (0.5 - a));
    return -std::cos(std::numbers::pi * (1.0 - a));
}

/// cot(pi*x)
inline double cot_pi(double x) { return cospi(x) / sinpi(x); }

/// tan(pi*u/2), stable up to the pole at u = 1.
inline double tan_pi_half(double u) {
    const double h = 0.5 * u;
    return sinpi(h) / cospi(h);
}

/// cot(x) - 1/x for small |x| (Laurent tail), used to split off the pole when
/// two singular terms are combined before evaluation.
inline double cot_minus_inv(double x) {
    const double x2 = x * x;
    // cot x = 1/x - x/3 - x^3/45 - 2x^5/945 - x^7/4725 - ...
    return -x * (1.0 / 3.0 + x2 * (1.0 / 45.0 + x2 * (2.0 / 945.0 + x2 / 4725.0)));
}

}  // namespace harmonia
