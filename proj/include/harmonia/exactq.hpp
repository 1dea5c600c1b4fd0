#pragma once

#include <harmonia/polyq.hpp>
#include <harmonia/rational.hpp>

namespace harmonia {

/// Which trigonometric identity seeds the harmonic-number integral formulas.
/// SinPiK uses tan(pi*u/2) weights; Sin2PiK and Cos2PiK use cot(pi*u) weights.
enum class Variant { SinPiK, Sin2PiK, Cos2PiK };

enum class Parity { Even, Odd };

enum class Trig { Cos, Sin };

/// Selects one kernel polynomial family. Sin2PiK shares its polynomials with
/// SinPiK; Cos2PiK uses the double-convolution kernels of one degree higher.
struct KernelFamily {
    Parity parity;
    Variant variant;
};

const char* to_string(Variant v);

/// Bernoulli number B_j under the convention B_1 = -1/2. Memoized; safe for
/// concurrent callers.
Rational bernoulli_number(unsigned j);

/// Bernoulli polynomial B_k(u) = sum_j C(k,j) B_{k-j} u^j; B_k(0) = B_k.
PolyQ bernoulli_polynomial(unsigned k);

/// B_k(u) - 2^{k-1} B_k(u/2), the Bernoulli-polynomial form of the kernels.
PolyQ bernoulli_kernel_form(unsigned k);

/// Exact sum_{j=1..n} j^i. i = 0 is special-cased to n; even/odd i use the
/// two Bernoulli-number expansions of the power sum.
Rational faulhaber_sum(unsigned i, unsigned long long n);

/// Kernel polynomial of order index k for the given family. Index k selects
/// p_{2k} (Even) or p_{2k+1} (Odd); (Even, SinPiK) with k = 0 is the constant -1.
/// Signs follow the generating-function expansions verbatim.
PolyQ kernel_poly(KernelFamily family, unsigned k);

/// The rational r with zeta(2k) = r * pi^{2k}.
Rational zeta_even_exact(unsigned k);

/// True iff, in exact arithmetic, the odd SinPiK kernels vanish at u = 1 and
/// the odd double-convolution kernels do as well, for every 1 <= k <= kmax.
bool kernel_vanishing_check(unsigned kmax);

/// 1 if k divides n else 0. The finite cosine sum (1/k) sum_{j=1..k}
/// cos(2 pi n j / k) telescopes exactly to this residue test: the terms are
/// the real parts of a geometric progression of k-th roots of unity.
Rational indicator_divides(long long k, long long n);

/// |truncated series - closed form| for the even power-series identity, at
/// real n: LHS truncated after `terms` outer terms, RHS =
/// (1/(2k)) cot(pi n/(2k)) sin(pi n). Throws when sin(pi n/(2k)) == 0.
double indicator_series_check_even(long long k, double n, int terms);

/// Same for the odd identity: RHS = (1/k) cot(pi n/(2k)) sin(pi n/2)^2.
double indicator_series_check_odd(long long k, double n, int terms);

}  // namespace harmonia
