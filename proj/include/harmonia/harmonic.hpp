#pragma once

#include <harmonia/exactq.hpp>
#include <harmonia/quad.hpp>

namespace harmonia {

struct HarmonicEval {
    unsigned k = 0;
    double n = 0.0;
    Variant variant = Variant::SinPiK;
    double value = 0.0;
    QuadResult quad;
};

/// H_k(n) for integer k >= 0 and real n > 0 through the integral formula of
/// the chosen variant: 1/(2 n^k) plus a variant constant times the integral
/// of kernel_poly against the trigonometric weight. Cos2PiK requires k >= 1.
/// For non-integer n the sine-seeded cot-weight variants have genuinely
/// divergent integrals; the quadrature then reports converged = false.
HarmonicEval h_integral(unsigned k, double n, Variant variant, const QuadSpec& spec);

/// |h_integral(0, n, SinPiK)|, which vanishes at positive integers n.
double h_zero_check(unsigned n, const QuadSpec& spec);

/// Closed right-hand side of the even generating function
/// sum_k H_{2k}(n) x^{2k}: n^2/(2(n^2-x^2)) minus the cos(pi x u) integral
/// term. At x = 0 the integral's x-factor is taken as vanishing, so the
/// value is 1/2 there. Requires |x| < 1 and x != +-n.
double genfun_even(double n, double x, const QuadSpec& spec);

/// Odd analog, sum_k H_{2k+1}(n) x^{2k+1}; 0 at x = 0.
double genfun_odd(double n, double x, const QuadSpec& spec);

/// int_0^1 u^{2k} sin(pi n (1-u)) tan(pi u/2) du; tends to 1 as n grows.
double theorem3_integral(unsigned k, double n, const QuadSpec& spec);

/// int_0^1 u^power sin(2 pi n (1-u)) cot(pi u) du; tends to -1 for power = 0
/// and to -1/2 for power >= 1.
double theorem4_integral(unsigned power, double n, const QuadSpec& spec);

namespace detail {

/// Stable oscillating endpoint factors sin(pi q (1-u)) and 1 - cos(pi q (1-u)).
/// Near u = 1 the reduced argument q(1-u) is used directly; near u = 0 the
/// angle-subtraction form keeps relative accuracy where a cot pole must be
/// cancelled.
struct OscFactor {
    double q, s_q, c_q;
    explicit OscFactor(double q);
    double sin_term(double u) const;
    double one_minus_cos(double u) const;
};

}  // namespace detail

}  // namespace harmonia
