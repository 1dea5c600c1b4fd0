#include <harmonia/oracle.hpp>
#include <harmonia/trig.hpp>

#include <stdexcept>

namespace harmonia::oracle {

Rational direct_harmonic(unsigned k, unsigned long long n) {
    if (n < 1) throw std::domain_error("direct_harmonic: n must be >= 1");
    Rational acc;
    for (unsigned long long j = 1; j <= n; ++j) acc += Rational(1, ipow(BigInt(j), k));
    return acc;
}

double direct_trig_sum(double m, unsigned k, unsigned long long n, Trig trig) {
    NeumaierSum s;
    for (unsigned long long j = 1; j <= n; ++j) {
        const double arg = 2.0 * static_cast<double>(j) / m;
        const double t = trig == Trig::Cos ? cospi(arg) : sinpi(arg);
        s.add(t / std::pow(static_cast<double>(j), static_cast<double>(k)));
    }
    return s.total();
}

namespace {

// sum_{n>N} n^{-s} by Euler-Maclaurin; accurate far beyond double for N >= 100.
double power_tail(double s, double N) {
    const double ns = std::pow(N, -s);
    return std::pow(N, 1.0 - s) / (s - 1.0) - 0.5 * ns + (s / 12.0) * ns / N -
           (s * (s + 1.0) * (s + 2.0) / 720.0) * ns / (N * N * N);
}

// sum_{n>N} ln(n) n^{-s}, same technique.
double log_tail(double s, double N) {
    const double lnN = std::log(N);
    const double ns = std::pow(N, -s);
    const double integral = std::pow(N, 1.0 - s) * (lnN / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0)));
    return integral - 0.5 * lnN * ns - (1.0 / 12.0) * (ns / N) * (1.0 - s * lnN);
}

}  // namespace

SeriesResult zeta_series(double s) {
    if (!(s > 1.0)) throw std::domain_error("zeta_series: requires s > 1");
    const long long N = 1000;
    NeumaierSum acc;
    for (long long n = 1; n <= N; ++n) acc.add(std::pow(static_cast<double>(n), -s));
    const double Nd = static_cast<double>(N);
    const double ns = std::pow(Nd, -s);
    // Euler-Maclaurin continuation past N
    double v = acc.total() + std::pow(Nd, 1.0 - s) / (s - 1.0) - 0.5 * ns;
    double pochhammer = s;
    const double b[4] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0};
    double np = ns / Nd;
    for (int i = 0; i < 4; ++i) {
        v += b[i] * pochhammer * np;
        pochhammer *= (s + 2 * i + 1) * (s + 2 * i + 2);
        np /= Nd * Nd;
    }
    // truncation of the Euler-Maclaurin tail plus rounding of the partial sum
    const double bound = 2.0 * std::fabs(pochhammer * np / 47900160.0) + 5e-16 * std::fabs(v);
    return {v, N, bound};
}

namespace {

// sum_{j>=1} (1/j - 1/(j+t)) for t > -1, Euler-Maclaurin accelerated.
SeriesResult shifted_harmonic_series(double t) {
    const long long J = 10000;
    NeumaierSum acc;
    for (long long j = 1; j < J; ++j) {
        const double jd = static_cast<double>(j);
        acc.add(t / (jd * (jd + t)));  // 1/j - 1/(j+t), fused
    }
    const double Jd = static_cast<double>(J);
    const auto d1 = [&](double x) { return -1.0 / (x * x) + 1.0 / ((x + t) * (x + t)); };
    const auto d3 = [&](double x) {
        const double x4 = x * x * x * x, y = x + t, y4 = y * y * y * y;
        return -6.0 / x4 + 6.0 / y4;
    };
    double v = acc.total() + std::log1p(t / Jd) + 0.5 * (t / (Jd * (Jd + t))) - (1.0 / 12.0) * d1(Jd) +
               (1.0 / 720.0) * d3(Jd);
    const double bound = 2.0 * std::fabs(t) * 720.0 / std::pow(Jd, 7.0) / 30240.0 + 1e-15;
    return {v, J, bound};
}

}  // namespace

SeriesResult harmonic_real(double n) {
    if (!(n > 0.0)) throw std::domain_error("harmonic_real: requires n > 0");
    return shifted_harmonic_series(n);
}

SeriesResult digamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("digamma: requires x > 0");
    SeriesResult s = shifted_harmonic_series(x - 1.0);
    s.value -= euler_gamma();
    return s;
}

double euler_gamma() { return 0.57721566490153286060651209008240243; }

namespace {

SeriesResult euler_sum_direct(unsigned horder, unsigned s, long long N) {
    // sum_{n<=N} H_horder(n) / n^s + tail from the asymptotics of H.
    NeumaierSum h, acc;
    for (long long n = 1; n <= N; ++n) {
        const double nd = static_cast<double>(n);
        h.add(std::pow(nd, -static_cast<double>(horder)));
        acc.add(h.total() * std::pow(nd, -static_cast<double>(s)));
    }
    const double Nd = static_cast<double>(N);
    const double sd = static_cast<double>(s);
    double tail, bound;
    if (horder == 1) {
        // H(n) = ln n + gamma + 1/(2n) - 1/(12 n^2) + O(n^-4)
        tail = log_tail(sd, Nd) + euler_gamma() * power_tail(sd, Nd) + 0.5 * power_tail(sd + 1.0, Nd) -
               (1.0 / 12.0) * power_tail(sd + 2.0, Nd);
        bound = power_tail(sd + 4.0, Nd) / 60.0 + (sd + 2) * (sd + 3) * (sd + 4) * (std::log(Nd) + 1.0) *
                                                      std::pow(Nd, -sd - 3.0) / 720.0;
    } else {
        // H_h(n) = zeta(h) - n^{1-h}/(h-1) + n^{-h}/2 - (h/12) n^{-h-1} + O(n^{-h-3})
        const double hd = static_cast<double>(horder);
        tail = zeta_series(hd).value * power_tail(sd, Nd) - power_tail(sd + hd - 1.0, Nd) / (hd - 1.0) +
               0.5 * power_tail(sd + hd, Nd) - (hd / 12.0) * power_tail(sd + hd + 1.0, Nd);
        bound = power_tail(sd + hd + 3.0, Nd);
    }
    return {acc.total() + tail, N, std::fabs(bound) + 1e-14};
}

}  // namespace

SeriesResult euler_sum_direct_even(unsigned k, unsigned r, long long terms) {
    if (r < 1) throw std::domain_error("euler_sum_direct_even: requires r >= 1");
    if (k == 0) return {0.0, 0, 0.0};  // H_0(n) = 0 termwise
    return euler_sum_direct(2 * k, 2 * r + 1, terms);
}

SeriesResult euler_sum_direct_odd(unsigned k, unsigned r, long long terms) {
    if (r < 1) throw std::domain_error("euler_sum_direct_odd: requires r >= 1");
    return euler_sum_direct(2 * k + 1, 2 * r, terms);
}

namespace {

// sum_{i>=0} (-1)^i a(i) for decreasing a, with the averaged-tail correction.
template <typename F>
double alternating_limit(F a, long long terms) {
    NeumaierSum s;
    for (long long i = 0; i < terms; ++i) s.add((i % 2 == 0 ? 1.0 : -1.0) * a(i));
    const double next = (terms % 2 == 0 ? 1.0 : -1.0) * a(terms);
    return s.total() + 0.5 * next;
}

}  // namespace

double catalan_constant() {
    return alternating_limit([](long long i) { double d = 2.0 * i + 1.0; return 1.0 / (d * d); }, 1000000);
}

double leibniz_pi_quarter() {
    return alternating_limit([](long long i) { return 1.0 / (2.0 * i + 1.0); }, 1000000);
}

double alternating_harmonic() {
    return -alternating_limit([](long long i) { return 1.0 / (i + 1.0); }, 1000000);
}

}  // namespace harmonia::oracle
