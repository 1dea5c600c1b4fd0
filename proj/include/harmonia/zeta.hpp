#pragma once

#include <harmonia/quad.hpp>

namespace harmonia {

/// Integral representations of zeta(2k+1). All three agree to quadrature
/// tolerance: Tan integrates the odd kernel against tan(pi u/2), Cot against
/// cot(pi u) with the 2 pi scaling, BernoulliCot integrates B_{2k+1}(u)
/// against cot(pi u).
enum class ZetaRep { Tan, Cot, BernoulliCot };

const char* to_string(ZetaRep rep);

/// zeta(2k+1) for k >= 1 through the chosen representation.
double zeta_odd(unsigned k, ZetaRep rep, const QuadSpec& quad);

/// Closed form of sum_{k>=1} zeta(2k) x^{2k} = 1/2 - pi x cot(pi x)/2,
/// for |x| < 1 (0 at x = 0, the series' own value).
double zeta_genfun_even(double x);

/// sum_{k>=1} zeta(2k+1) x^{2k+1} as the integral
/// (pi x/2) int_0^1 (sin(pi x u)/sin(pi x) - u) tan(pi u/2) du.
double zeta_genfun_odd(double x, const QuadSpec& quad);

/// sum_{n>=1} H_{2k}(n)/n^{2r+1}; identically zero for k = 0.
double euler_sum_even_orders(unsigned k, unsigned r, const QuadSpec& quad);

/// sum_{n>=1} H_{2k+1}(n)/n^{2r}; equals 2 zeta(3) at k = 0, r = 1.
double euler_sum_odd_orders(unsigned k, unsigned r, const QuadSpec& quad);

}  // namespace harmonia
