#include <harmonia/exactq.hpp>
#include <harmonia/trig.hpp>

#include <mutex>
#include <stdexcept>
#include <vector>

namespace harmonia {

const char* to_string(Variant v) {
    switch (v) {
        case Variant::SinPiK: return "sin-pi-k";
        case Variant::Sin2PiK: return "sin-2pi-k";
        case Variant::Cos2PiK: return "cos-2pi-k";
    }
    return "?";
}

Rational bernoulli_number(unsigned j) {
    static std::mutex mu;
    static std::vector<Rational> cache{Rational(1), Rational(-1, 2)};
    std::lock_guard lock(mu);
    while (cache.size() <= j) {
        const unsigned m = static_cast<unsigned>(cache.size());
        // sum_{i=0..m} C(m+1, i) B_i = 0 for m >= 1
        Rational acc;
        for (unsigned i = 0; i < m; ++i) acc += Rational(binomial(m + 1, i)) * cache[i];
        cache.push_back(-acc / Rational(m + 1));
    }
    return cache[j];
}

PolyQ bernoulli_polynomial(unsigned k) {
    std::vector<Rational> c(k + 1);
    for (unsigned j = 0; j <= k; ++j) c[j] = Rational(binomial(k, j)) * bernoulli_number(k - j);
    return PolyQ(std::move(c));
}

PolyQ bernoulli_kernel_form(unsigned k) {
    const PolyQ bk = bernoulli_polynomial(k);
    const PolyQ half = bk.with_scaled_arg(Rational(1, 2));
    const Rational scale = k == 0 ? Rational(1, 2) : Rational(pow2(k - 1));
    return bk - scale * half;
}

Rational faulhaber_sum(unsigned i, unsigned long long n) {
    if (n < 1) throw std::domain_error("faulhaber_sum: n must be >= 1");
    if (i == 0) return {BigInt(n)};  // the power-sum expansions miss this case by 1/2
    // n^i/2 + sum_j i! B_{2j} n^{i+1-2j} / ((2j)! (i+1-2j)!); the even- and
    // odd-power expansions have this shape in common, only the j range differs
    // and i/2 covers both.
    const BigInt nb(n);
    Rational acc(ipow(nb, i), 2);
    for (unsigned j = 0; j <= i / 2; ++j)
        acc += Rational(factorial(i) * ipow(nb, i + 1 - 2 * j), factorial(2 * j) * factorial(i + 1 - 2 * j)) *
               bernoulli_number(2 * j);
    return acc;
}

namespace {

Rational tangent_weight(unsigned j) {
    // B_{2j} (2 - 2^{2j}) / (2j)!
    return bernoulli_number(2 * j) * Rational(BigInt(2) - pow2(2 * j), factorial(2 * j));
}

// p_{2k}(u): coefficient of x^{2k} in -x cos(xu)/sin(x).
PolyQ kernel_even_single(unsigned k) {
    const int sign = (k % 2 == 0) ? -1 : 1;  // (-1)^{k+1}
    PolyQ p;
    for (unsigned j = 0; j <= k; ++j) {
        Rational c = tangent_weight(j) / Rational(factorial(2 * k - 2 * j));
        p += PolyQ::monomial(Rational(sign) * c, 2 * k - 2 * j);
    }
    return p;
}

// p_{2k+1}(u): coefficient of x^{2k+1} in x sin(xu)/sin(x).
PolyQ kernel_odd_single(unsigned k) {
    const int sign = (k % 2 == 0) ? 1 : -1;  // (-1)^k
    PolyQ p;
    for (unsigned j = 0; j <= k; ++j) {
        Rational c = tangent_weight(j) / Rational(factorial(2 * k + 1 - 2 * j));
        p += PolyQ::monomial(Rational(sign) * c, 2 * k + 1 - 2 * j);
    }
    return p;
}

Rational convolution_weight(unsigned i) {
    // sum_{j=0..i} B_{2j} B_{2i-2j} (2-2^{2j})(2-2^{2i-2j}) / ((2j)!(2i-2j)!),
    // the magnitude of the x^{2i} coefficient of (x/sin x)^2.
    Rational acc;
    for (unsigned j = 0; j <= i; ++j) acc += tangent_weight(j) * tangent_weight(i - j);
    return acc;
}

// Cos2PiK even kernel: coefficient of x^{2k} in (x/sin x)^2 sin(2ux)/(2x).
PolyQ kernel_even_double(unsigned k) {
    PolyQ p;
    for (unsigned i = 0; i <= k; ++i) {
        const unsigned d = 2 * k + 1 - 2 * i;
        // (-1)^k/2 * (-1)^i c_i * (-1)^{k-i} (2u)^d / d!  with the (x/sinx)^2 signs
        // folded: the x^{2i} coefficient there is (-1)^i c_i and sin contributes
        // (-1)^{k-i}, so every term carries (-1)^k overall.
        Rational c = convolution_weight(i) * Rational(pow2(d), factorial(d)) / 2;
        if (k % 2 == 1) c = -c;
        p += PolyQ::monomial(c, d);
    }
    return p;
}

// Cos2PiK odd kernel: coefficient of x^{2k+1} in (x/sin x)^2 (cos(2ux)-1)/(2x).
PolyQ kernel_odd_double(unsigned k) {
    PolyQ p;
    for (unsigned i = 0; i <= k; ++i) {
        const unsigned d = 2 * k + 2 - 2 * i;
        Rational c = convolution_weight(i) * Rational(pow2(d), factorial(d)) / 2;
        if (k % 2 == 0) c = -c;  // overall (-1)^{k+1}
        p += PolyQ::monomial(c, d);
    }
    return p;
}

}  // namespace

PolyQ kernel_poly(KernelFamily family, unsigned k) {
    switch (family.variant) {
        case Variant::SinPiK:
        case Variant::Sin2PiK:
            // the two sine-seeded variants share one polynomial family
            return family.parity == Parity::Even ? kernel_even_single(k) : kernel_odd_single(k);
        case Variant::Cos2PiK:
            return family.parity == Parity::Even ? kernel_even_double(k) : kernel_odd_double(k);
    }
    throw std::invalid_argument("kernel_poly: unsupported kernel family");
}

Rational zeta_even_exact(unsigned k) {
    if (k < 1) throw std::domain_error("zeta_even_exact: k must be >= 1");
    // zeta(2k) = -(-1)^k (2 pi)^{2k} B_{2k} / (2 (2k)!)
    Rational r = bernoulli_number(2 * k) * Rational(pow2(2 * k - 1), factorial(2 * k));
    return (k % 2 == 0) ? -r : r;
}

bool kernel_vanishing_check(unsigned kmax) {
    if (kmax < 1) throw std::domain_error("kernel_vanishing_check: kmax must be >= 1");
    for (unsigned k = 1; k <= kmax; ++k) {
        if (!kernel_odd_single(k).eval(1).is_zero()) return false;
        if (!kernel_odd_double(k).eval(1).is_zero()) return false;
    }
    return true;
}

Rational indicator_divides(long long k, long long n) {
    if (k < 1) throw std::domain_error("indicator_divides: k must be >= 1");
    const long long r = ((n % k) + k) % k;
    return Rational(r == 0 ? 1 : 0);
}

namespace {

double indicator_series_lhs(long long k, double n, int terms, bool odd) {
    // sum_{i>=0} (-1)^i (pi n)^{2i+o} sum_{j=0..i} B_{2j} k^{-2j} / ((2i+1+o-2j)! (2j)!)
    // with o = 0 (even identity) or 1 (odd identity).
    const int o = odd ? 1 : 0;
    const double pn = std::numbers::pi * n;
    const double pn2 = pn * pn;
    std::vector<double> bw(terms + 1);  // B_{2j} k^{-2j} / (2j)!
    double kpow = 1.0;
    for (int j = 0; j <= terms; ++j) {
        bw[j] = to_double(bernoulli_number(2 * j) / Rational(factorial(2 * j))) * kpow;
        kpow /= static_cast<double>(k) * static_cast<double>(k);
    }
    double outer = odd ? pn : 1.0;
    double acc = 0.0, comp = 0.0;
    for (int i = 0; i < terms; ++i) {
        double inner = 0.0;
        for (int j = 0; j <= i; ++j)
            inner += bw[j] * to_double(Rational(1, factorial(2 * i + 1 + o - 2 * j)));
        const double term = (i % 2 == 0 ? 1.0 : -1.0) * outer * inner;
        // Neumaier compensation
        const double t = acc + term;
        comp += (std::fabs(acc) >= std::fabs(term)) ? (acc - t) + term : (term - t) + acc;
        acc = t;
        outer *= pn2;
    }
    return acc + comp;
}

}  // namespace

double indicator_series_check_even(long long k, double n, int terms) {
    if (k < 1) throw std::domain_error("indicator series: k must be >= 1");
    const double s = sinpi(n / (2.0 * k));
    if (s == 0.0)
        throw std::domain_error("indicator series: sin(pi n/(2k)) vanishes (removable-singularity input)");
    const double rhs = (1.0 / (2.0 * k)) * (cospi(n / (2.0 * k)) / s) * sinpi(n);
    return std::fabs(indicator_series_lhs(k, n, terms, false) - rhs);
}

double indicator_series_check_odd(long long k, double n, int terms) {
    if (k < 1) throw std::domain_error("indicator series: k must be >= 1");
    const double s = sinpi(n / (2.0 * k));
    if (s == 0.0)
        throw std::domain_error("indicator series: sin(pi n/(2k)) vanishes (removable-singularity input)");
    const double half = sinpi(0.5 * n);
    const double rhs = (1.0 / k) * (cospi(n / (2.0 * k)) / s) * half * half;
    return std::fabs(indicator_series_lhs(k, n, terms, true) - rhs);
}

}  // namespace harmonia
