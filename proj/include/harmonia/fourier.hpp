#pragma once

#include <harmonia/exactq.hpp>
#include <harmonia/quad.hpp>

#include <optional>
#include <stdexcept>

namespace harmonia {

/// Request for a trigonometric partial sum sum_{j=1..n} trig(2 pi j/m)/j^k,
/// or its n -> infinity limit when n is unset. Requires m >= 1 and k >= 1.
struct FourierSpec {
    double m = 1.0;
    unsigned k = 1;                 // the order (exponent of j)
    Trig trig = Trig::Cos;
    std::optional<long long> n;     // unset means infinity
};

/// The limit formula is excluded at C^1_1 (the series diverges).
struct DivergentSum : std::domain_error {
    using std::domain_error::domain_error;
};

/// The limit formula is excluded at S^1_1 (every term is zero; the closed
/// form does not apply).
struct TrivialZero : std::domain_error {
    using std::domain_error::domain_error;
};

/// Finite partial sum via the boundary term + harmonic-number recursion +
/// (1-u)-kernel integral with weight cot(pi u/m).
double partial_sum(const FourierSpec& spec, const QuadSpec& quad);

/// n -> infinity limit. (Cos, even) and (Sin, odd) are finite zeta(2j)
/// combinations; (Cos, odd) and (Sin, even) combine zeta(2j+1), log(m) and
/// the n-independent regularized integral
/// int_0^1 (1-u)^p cot(pi u/m) - m (1-u) cot(pi u) du.
double limit_closed_form(const FourierSpec& spec, const QuadSpec& quad);

/// The Bernoulli-polynomial Fourier closed form evaluated at x = 1/m; only
/// the (Cos, even) and (Sin, odd) families have one.
double limit_bernoulli_form(const FourierSpec& spec);

/// int_0^1 (1-u)^k sin(2 pi n u/m) cot(pi u/m) du; tends to 1 when k = 0 and
/// m = 1, and to m/2 otherwise.
double theorem1_integral(unsigned k, double m, double n, const QuadSpec& quad);

/// The fused difference integrand
/// (1-u)^k cos(2 pi n u/m) cot(pi u/m) - m (1-u) cos(2 pi n u) cot(pi u),
/// integrated as a single function (the terms alone are non-integrable);
/// tends to m log(m)/pi. Excluded at k = 0, m = 1.
double theorem2_integral(unsigned k, double m, double n, const QuadSpec& quad);

/// int_0^1 (u^k - u) cos(pi n (1-u)) tan(pi u/2) du; tends to 0.
double corollary1_integral(unsigned k, double n, const QuadSpec& quad);

}  // namespace harmonia
