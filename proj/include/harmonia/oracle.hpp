#pragma once

#include <harmonia/exactq.hpp>
#include <harmonia/rational.hpp>

#include <cmath>

namespace harmonia::oracle {

/// Reference value from a series evaluation: |true - value| <= tail_bound by
/// construction of the series and its correction terms.
struct SeriesResult {
    double value = 0.0;
    long long terms_used = 0;
    double tail_bound = 0.0;
};

/// Error-free-transformation (Neumaier) accumulator for long float series.
struct NeumaierSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        comp += (std::fabs(sum) >= std::fabs(x)) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    double total() const { return sum + comp; }
};

/// Literal sum_{j=1..n} 1/j^k in exact arithmetic. For k = 0 this counts the
/// terms (the starred convention), i.e. returns n.
Rational direct_harmonic(unsigned k, unsigned long long n);

/// Literal floating-point sum_{j=1..n} trig(2 pi j / m) / j^k, compensated.
double direct_trig_sum(double m, unsigned k, unsigned long long n, Trig trig);

/// zeta(s) for real s > 1 by direct summation plus Euler-Maclaurin tail.
SeriesResult zeta_series(double s);

/// sum_{j>=1} (1/j - 1/(j+n)) for real n > 0, the series defining the
/// harmonic numbers off the integers.
SeriesResult harmonic_real(double n);

/// psi(x) for real x > 0, from the same series shifted by one.
SeriesResult digamma(double x);

/// The Euler-Mascheroni constant.
double euler_gamma();

/// Brute-force sum_{n=1..terms} H_{2k}(n)/n^{2r+1} plus tail estimate.
SeriesResult euler_sum_direct_even(unsigned k, unsigned r, long long terms = 100000);

/// Brute-force sum_{n=1..terms} H_{2k+1}(n)/n^{2r} plus tail estimate.
SeriesResult euler_sum_direct_odd(unsigned k, unsigned r, long long terms = 100000);

// Alternating-series limits used as independent witnesses for the Fourier
// sums; each is the literal partial sum with the half-term tail correction.
double catalan_constant();       // sum (-1)^i / (2i+1)^2
double leibniz_pi_quarter();     // sum (-1)^i / (2i+1)
double alternating_harmonic();   // sum_{j>=1} (-1)^j / j = -ln 2

}  // namespace harmonia::oracle
