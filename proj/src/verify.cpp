#include <harmonia/fourier.hpp>
#include <harmonia/harmonic.hpp>
#include <harmonia/oracle.hpp>
#include <harmonia/polyq.hpp>
#include <harmonia/trig.hpp>
#include <harmonia/verify.hpp>
#include <harmonia/zeta.hpp>

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace harmonia::verify {

namespace {

constexpr double kPi = std::numbers::pi;

// --- truncated power-series arithmetic in x^2, exact coefficients ---------

std::vector<Rational> reciprocal_series(const std::vector<Rational>& a) {
    // 1/A for A = sum a_i x^{2i} with a_0 = 1
    std::vector<Rational> r(a.size());
    r[0] = Rational(1) / a[0];
    for (std::size_t i = 1; i < a.size(); ++i) {
        Rational acc;
        for (std::size_t j = 1; j <= i; ++j) acc += a[j] * r[i - j];
        r[i] = -acc / a[0];
    }
    return r;
}

std::vector<Rational> square_series(const std::vector<Rational>& a) {
    std::vector<Rational> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j + i < a.size(); ++j) out[i + j] += a[i] * a[j];
    return out;
}

}  // namespace

PolyQ genfun_series_kernel(KernelFamily family, unsigned k) {
    const std::size_t len = k + 2;
    std::vector<Rational> sinc(len);  // sin(x)/x
    for (std::size_t i = 0; i < len; ++i)
        sinc[i] = Rational(i % 2 == 0 ? 1 : -1, factorial(2 * static_cast<unsigned>(i) + 1));
    const std::vector<Rational> inv = reciprocal_series(sinc);  // x/sin(x)

    PolyQ acc;
    if (family.variant != Variant::Cos2PiK) {
        if (family.parity == Parity::Even) {
            // -x cos(xu)/sin(x): c_i(u) = -(-1)^i u^{2i}/(2i)!
            for (unsigned j = 0; j <= k; ++j) {
                const unsigned i = k - j;
                acc += PolyQ::monomial(
                    inv[j] * Rational(i % 2 == 0 ? -1 : 1, factorial(2 * i)), 2 * i);
            }
        } else {
            // x sin(xu)/sin(x): s_i(u) = (-1)^i u^{2i+1}/(2i+1)!
            for (unsigned j = 0; j <= k; ++j) {
                const unsigned i = k - j;
                acc += PolyQ::monomial(
                    inv[j] * Rational(i % 2 == 0 ? 1 : -1, factorial(2 * i + 1)), 2 * i + 1);
            }
        }
        return acc;
    }
    const std::vector<Rational> inv2 = square_series(inv);  // (x/sin x)^2
    if (family.parity == Parity::Odd) {
        // (x/sin x)^2 (cos(2ux)-1)/(2x): d_i(u) = (-1)^i (2u)^{2i}/(2 (2i)!), i >= 1
        for (unsigned j = 0; j <= k; ++j) {
            const unsigned i = k + 1 - j;
            acc += PolyQ::monomial(
                inv2[j] * Rational((i % 2 == 0 ? 1 : -1) * pow2(2 * i), BigInt(2) * factorial(2 * i)),
                2 * i);
        }
    } else {
        // (x/sin x)^2 sin(2ux)/(2x): e_i(u) = (-1)^i (2u)^{2i+1}/(2 (2i+1)!)
        for (unsigned j = 0; j <= k; ++j) {
            const unsigned i = k - j;
            acc += PolyQ::monomial(
                inv2[j] *
                    Rational((i % 2 == 0 ? 1 : -1) * pow2(2 * i + 1), BigInt(2) * factorial(2 * i + 1)),
                2 * i + 1);
        }
    }
    return acc;
}

namespace {

struct SuiteContext {
    double scale;
    std::vector<CheckRow> rows;

    void check(std::string id, double expected, double got, double tol, bool gating = true) {
        rows.push_back({std::move(id), expected, got, tol,
                        std::fabs(got - expected) <= tol * scale, gating});
    }
    void check_exact(std::string id, bool ok) {
        rows.push_back({std::move(id), 1.0, ok ? 1.0 : 0.0, 0.0, ok, true});
    }
};

QuadSpec default_quad() { return {}; }

// ------------------------------ exact ------------------------------------

void suite_exact(SuiteContext& ctx) {
    ctx.check_exact("exact/bernoulli-b0", bernoulli_number(0) == Rational(1));
    ctx.check_exact("exact/bernoulli-b1-convention", bernoulli_number(1) == Rational(-1, 2));
    ctx.check_exact("exact/bernoulli-b2", bernoulli_number(2) == Rational(1, 6));
    {
        bool ok = true;
        for (unsigned m = 1; m <= 10; ++m) ok = ok && bernoulli_number(2 * m + 1).is_zero();
        ctx.check_exact("exact/bernoulli-odd-vanish-k<=21", ok);
    }
    {
        // defining recurrence: sum_{i=0..j} C(j+1,i) B_i = 0
        bool ok = true;
        for (unsigned j = 1; j <= 24; ++j) {
            Rational acc;
            for (unsigned i = 0; i <= j; ++i)
                acc += Rational(binomial(j + 1, i)) * bernoulli_number(i);
            ok = ok && acc.is_zero();
        }
        ctx.check_exact("exact/bernoulli-recurrence-j<=24", ok);
    }
    ctx.check_exact("exact/zeta2-eq-pi2-over-6", zeta_even_exact(1) == Rational(1, 6));
    ctx.check_exact("exact/zeta4-eq-pi4-over-90", zeta_even_exact(2) == Rational(1, 90));
    ctx.check_exact("exact/zeta6-eq-pi6-over-945", zeta_even_exact(3) == Rational(1, 945));
    for (unsigned k = 1; k <= 5; ++k) {
        const double N = 1e4;
        oracle::NeumaierSum s;
        for (long long n = 1; n <= 10000; ++n)
            s.add(std::pow(static_cast<double>(n), -2.0 * k));
        const double expected = to_double(zeta_even_exact(k)) * std::pow(kPi, 2.0 * k);
        // true-tail bound plus the rounding of the float partial sum, which
        // dominates once the tail drops below machine precision (k >= 3)
        const double bound = std::pow(N, 1.0 - 2.0 * k) / (2.0 * k - 1.0) + 8e-16 * expected;
        ctx.check("exact/zeta-even-vs-series-k" + std::to_string(k), expected, s.total(), bound);
    }
    {
        bool ok = true;
        for (unsigned i = 0; i <= 12 && ok; ++i)
            for (unsigned long long n = 1; n <= 50 && ok; ++n) {
                Rational literal;
                for (unsigned long long j = 1; j <= n; ++j) literal += Rational(ipow(BigInt(j), i));
                ok = faulhaber_sum(i, n) == literal;
            }
        ctx.check_exact("exact/faulhaber-literal-i<=12-n<=50", ok);
    }
    ctx.check_exact("exact/faulhaber-i2-n3", faulhaber_sum(2, 3) == Rational(14));
    ctx.check_exact("exact/faulhaber-i3-n4", faulhaber_sum(3, 4) == Rational(100));
    ctx.check_exact("exact/faulhaber-i0-n5", faulhaber_sum(0, 5) == Rational(5));
    {
        bool ok = true;
        for (unsigned k = 0; k <= 20; ++k)
            ok = ok && bernoulli_polynomial(k).eval(0) == bernoulli_number(k);
        ctx.check_exact("exact/bernoulli-poly-at-0-k<=20", ok);
    }
    ctx.check_exact("exact/kernel-p2",
                    kernel_poly({Parity::Even, Variant::SinPiK}, 1) ==
                        PolyQ({Rational(-1, 6), Rational(0), Rational(1, 2)}));
    ctx.check_exact("exact/kernel-p3",
                    kernel_poly({Parity::Odd, Variant::SinPiK}, 1) ==
                        PolyQ({Rational(0), Rational(1, 6), Rational(0), Rational(-1, 6)}));
    ctx.check_exact("exact/kernel-cos-odd-k1",
                    kernel_poly({Parity::Odd, Variant::Cos2PiK}, 1) ==
                        PolyQ({Rational(0), Rational(0), Rational(-1, 3), Rational(0), Rational(1, 3)}));
    {
        // p_{2k} = (-1)^{k+1} (2/(2k)!) (B_{2k}(u) - 2^{2k-1} B_{2k}(u/2)),
        // p_{2k+1} = (-1)^k (2/(2k+1)!) (B_{2k+1}(u) - 2^{2k} B_{2k+1}(u/2))
        bool ok = true;
        for (unsigned k = 0; k <= 6; ++k) {
            const Rational ce(k % 2 == 0 ? -2 : 2, factorial(2 * k));
            ok = ok && kernel_poly({Parity::Even, Variant::SinPiK}, k) ==
                           ce * bernoulli_kernel_form(2 * k);
            const Rational co(k % 2 == 0 ? 2 : -2, factorial(2 * k + 1));
            ok = ok && kernel_poly({Parity::Odd, Variant::SinPiK}, k) ==
                           co * bernoulli_kernel_form(2 * k + 1);
        }
        ctx.check_exact("exact/kernel-eq-bernoulli-form-k<=6", ok);
    }
    {
        bool ok = true;
        for (unsigned k = 0; k <= 5; ++k) {
            ok = ok && kernel_poly({Parity::Even, Variant::SinPiK}, k) ==
                           genfun_series_kernel({Parity::Even, Variant::SinPiK}, k);
            ok = ok && kernel_poly({Parity::Odd, Variant::SinPiK}, k) ==
                           genfun_series_kernel({Parity::Odd, Variant::SinPiK}, k);
            ok = ok && kernel_poly({Parity::Even, Variant::Cos2PiK}, k) ==
                           genfun_series_kernel({Parity::Even, Variant::Cos2PiK}, k);
            ok = ok && kernel_poly({Parity::Odd, Variant::Cos2PiK}, k) ==
                           genfun_series_kernel({Parity::Odd, Variant::Cos2PiK}, k);
        }
        ctx.check_exact("exact/kernel-eq-series-division-k<=5", ok);
    }
    ctx.check_exact("exact/kernel-vanishing-k<=8", kernel_vanishing_check(8));
    {
        bool ok = true;
        double worst = 0.0;
        for (long long k = 1; k <= 12; ++k)
            for (long long n = -30; n <= 30; ++n) {
                const Rational ind = indicator_divides(k, n);
                ok = ok && (ind == Rational(0) || ind == Rational(1));
                double cossum = 0.0;
                for (long long j = 1; j <= k; ++j)
                    cossum += cospi(2.0 * static_cast<double>(n) * static_cast<double>(j) / static_cast<double>(k));
                worst = std::max(worst, std::fabs(cossum / static_cast<double>(k) - to_double(ind)));
            }
        ctx.check_exact("exact/indicator-values-binary", ok);
        ctx.check("exact/indicator-vs-cosine-sum", 0.0, worst, 1e-9);
    }
    {
        const double pts[5][2] = {{0.5, 2}, {0.75, 2}, {1.25, 3}, {0.3, 1}, {1.5, 4}};
        double worst_even = 0.0, worst_odd = 0.0;
        for (const auto& p : pts) {
            worst_even = std::max(worst_even,
                                  indicator_series_check_even(static_cast<long long>(p[1]), p[0], 40));
            worst_odd = std::max(worst_odd,
                                 indicator_series_check_odd(static_cast<long long>(p[1]), p[0], 40));
        }
        ctx.check("exact/eq5-series-5pts", 0.0, worst_even, 1e-12);
        ctx.check("exact/eq8-series-5pts", 0.0, worst_odd, 1e-12);
    }
}

// ----------------------------- harmonic ----------------------------------

void suite_harmonic(SuiteContext& ctx) {
    const QuadSpec qs = default_quad();
    const Variant variants[3] = {Variant::SinPiK, Variant::Sin2PiK, Variant::Cos2PiK};
    // integer-consistency sweep, and the pairwise variant agreement on the
    // same grid
    double sweep_worst[3] = {0, 0, 0};
    double pair_worst[3] = {0, 0, 0};  // (0,1) (0,2) (1,2)
    for (unsigned k = 1; k <= 6; ++k)
        for (unsigned n = 1; n <= 30; ++n) {
            const double direct = to_double(oracle::direct_harmonic(k, n));
            double v[3];
            for (int i = 0; i < 3; ++i) {
                v[i] = h_integral(k, n, variants[i], qs).value;
                sweep_worst[i] = std::max(sweep_worst[i], std::fabs(v[i] - direct));
            }
            pair_worst[0] = std::max(pair_worst[0], std::fabs(v[0] - v[1]));
            pair_worst[1] = std::max(pair_worst[1], std::fabs(v[0] - v[2]));
            pair_worst[2] = std::max(pair_worst[2], std::fabs(v[1] - v[2]));
        }
    for (int i = 0; i < 3; ++i)
        ctx.check(std::string("harmonic/sweep-") + to_string(variants[i]), 0.0, sweep_worst[i], 1e-8);
    ctx.check("harmonic/variants-sin-vs-sin2", 0.0, pair_worst[0], 1e-8);
    ctx.check("harmonic/variants-sin-vs-cos2", 0.0, pair_worst[1], 1e-8);
    ctx.check("harmonic/variants-sin2-vs-cos2", 0.0, pair_worst[2], 1e-8);
    {
        double worst = 0.0;
        for (unsigned n = 1; n <= 10; ++n) worst = std::max(worst, h_zero_check(n, qs));
        ctx.check("harmonic/h0-n<=10", 0.0, worst, 1e-9);
    }
    const struct {
        unsigned k;
        double expected;
    } constants[] = {{2, 1.25}, {3, 1.125}, {4, 1.0625}, {5, 1.03125}, {6, 1.015625}};
    for (const auto& c : constants)
        ctx.check("harmonic/H" + std::to_string(c.k) + "(2)", c.expected,
                  h_integral(c.k, 2.0, Variant::SinPiK, qs).value, 1e-9);
    {
        // recurrence residual: H_{2k}(n) against the prior even orders plus
        // the u^{2k} integral
        double worst = 0.0;
        for (unsigned k = 1; k <= 3; ++k)
            for (unsigned n = 1; n <= 20; ++n) {
                double head = 0.0;
                for (unsigned j = 0; j <= k; ++j) {
                    const int sgn = j % 2 == 0 ? 1 : -1;
                    head += sgn * std::pow(kPi * n, 2.0 * j) / to_double(factorial(2 * j + 1));
                }
                head /= 2.0 * std::pow(n, 2.0 * k);
                double rec = 0.0;
                for (unsigned j = 0; j < k; ++j) {
                    const int sgn = (k - j) % 2 == 0 ? 1 : -1;
                    rec += sgn * std::pow(kPi, 2.0 * (k - j)) / to_double(factorial(2 * (k - j) + 1)) *
                           h_integral(2 * j, n, Variant::SinPiK, qs).value;
                }
                const int sgn_k = k % 2 == 0 ? 1 : -1;
                const double tail = sgn_k * std::pow(kPi, 2.0 * k) / (2.0 * to_double(factorial(2 * k))) *
                                    theorem3_integral(k, n, qs);
                const double lhs = h_integral(2 * k, n, Variant::SinPiK, qs).value;
                worst = std::max(worst, std::fabs(lhs - (head - rec - tail)));
            }
        ctx.check("harmonic/recurrence-residual-k<=3-n<=20", 0.0, worst, 1e-7);
    }
    {
        const double z4 = std::pow(kPi, 4) / 90.0;
        const double e200 = std::fabs(h_integral(4, 200.0, Variant::SinPiK, qs).value - z4);
        const double e100 = std::fabs(h_integral(4, 100.0, Variant::SinPiK, qs).value - z4);
        ctx.check("harmonic/H4(200)-vs-zeta4", 0.0, e200, 2e-3);
        ctx.check("harmonic/H4-zeta4-trend", 0.0, e200, std::max(e100, 1e-9));
    }
    {
        // generating functions at n = 2, x = 0.1 against the coefficient series
        double even = 0.0, odd = 0.0;
        const double x = 0.1;
        for (unsigned k = 1; k <= 12; ++k) {
            const double hk = 1.0 + std::pow(2.0, -2.0 * k);
            even += hk * std::pow(x, 2.0 * k);
            const double hk1 = 1.0 + std::pow(2.0, -(2.0 * k - 1.0));
            odd += hk1 * std::pow(x, 2.0 * k - 1.0);
        }
        ctx.check("harmonic/genfun-even-n2-x0.1", even, genfun_even(2.0, x, qs), 1e-8);
        ctx.check("harmonic/genfun-odd-n2-x0.1", odd, genfun_odd(2.0, x, qs), 1e-8);
        ctx.check("harmonic/genfun-even-x0", 0.5, genfun_even(1.0, 0.0, qs), 1e-15);
    }
    // non-integer arguments: the formula value is reported against the
    // continuation oracle but equality is not asserted
    ctx.check("harmonic/H(0.5)-vs-continuation", 2.0 - 2.0 * std::log(2.0),
              h_integral(1, 0.5, Variant::SinPiK, qs).value, 1e-8, /*gating=*/false);
}

// ----------------------------- fourier -----------------------------------

void suite_fourier(SuiteContext& ctx) {
    const QuadSpec qs = default_quad();
    {
        double worst = 0.0;
        for (unsigned k = 2; k <= 4; ++k)
            for (long long n = 1; n <= 20; ++n)
                worst = std::max(worst,
                                 std::fabs(partial_sum({1.0, k, Trig::Cos, n}, qs) -
                                           h_integral(k, static_cast<double>(n), Variant::SinPiK, qs).value));
        ctx.check("fourier/reduction-m1", 0.0, worst, 1e-8);
    }
    for (const double m : {1.0, 2.0, 3.0, 4.0, 6.5}) {
        double worst = 0.0;
        for (unsigned k = 1; k <= 4; ++k)
            for (long long n = 1; n <= 20; ++n)
                for (const Trig t : {Trig::Cos, Trig::Sin})
                    worst = std::max(worst, std::fabs(partial_sum({m, k, t, n}, qs) -
                                                      oracle::direct_trig_sum(m, k, n, t)));
        ctx.check("fourier/oracle-grid-m" + std::to_string(m).substr(0, 3), 0.0, worst, 1e-8);
    }
    {
        double worst = 0.0;
        for (unsigned k = 2; k <= 4; ++k)
            for (long long n = 1; n <= 10; ++n) {
                const double lhs = partial_sum({2.0, k, Trig::Cos, 2 * n}, qs);
                const double rhs =
                    std::pow(2.0, 1.0 - static_cast<double>(k)) *
                        h_integral(k, static_cast<double>(n), Variant::SinPiK, qs).value -
                    h_integral(k, static_cast<double>(2 * n), Variant::SinPiK, qs).value;
                worst = std::max(worst, std::fabs(lhs - rhs));
            }
        ctx.check("fourier/bisection-identity", 0.0, worst, 1e-8);
    }
    for (const double m : {2.0, 3.0, 4.0})
        for (unsigned K = 1; K <= 2; ++K) {
            ctx.check("fourier/limit-AS-cos-m" + std::to_string(static_cast<int>(m)) + "-k" +
                          std::to_string(2 * K),
                      limit_bernoulli_form({m, 2 * K, Trig::Cos, {}}),
                      limit_closed_form({m, 2 * K, Trig::Cos, {}}, qs), 1e-10);
            ctx.check("fourier/limit-AS-sin-m" + std::to_string(static_cast<int>(m)) + "-k" +
                          std::to_string(2 * K + 1),
                      limit_bernoulli_form({m, 2 * K + 1, Trig::Sin, {}}),
                      limit_closed_form({m, 2 * K + 1, Trig::Sin, {}}, qs), 1e-10);
        }
    ctx.check("fourier/S41-pi-over-4", kPi / 4.0, limit_closed_form({4.0, 1, Trig::Sin, {}}, qs), 1e-8);
    ctx.check("fourier/C21-minus-ln2", -std::log(2.0), limit_closed_form({2.0, 1, Trig::Cos, {}}, qs),
              1e-8);
    ctx.check("fourier/S42-catalan", 0.915965594177219015, limit_closed_form({4.0, 2, Trig::Sin, {}}, qs),
              1e-8);
    {
        // partial sums approach the limits at the algebraic rate
        const struct {
            double m;
            unsigned k;
            Trig trig;
        } cases[] = {{2.0, 2, Trig::Cos}, {4.0, 3, Trig::Sin}, {2.0, 3, Trig::Cos}, {4.0, 2, Trig::Sin}};
        for (const auto& c : cases) {
            QuadSpec big = qs;
            big.max_panels = 40000;
            big.abs_tol = 1e-13;
            const double lim = limit_closed_form({c.m, c.k, c.trig, {}}, qs);
            const double part = partial_sum({c.m, c.k, c.trig, 10000}, big);
            ctx.check("fourier/approach-limit-" + std::string(c.trig == Trig::Cos ? "C" : "S") +
                          std::to_string(c.k) + "-m" + std::to_string(static_cast<int>(c.m)),
                      lim, part, 10.0 * std::pow(10.0, -4.0 * (c.k - 1.0)));
        }
    }
    {
        bool threw = false;
        try {
            limit_closed_form({1.0, 1, Trig::Sin, {}}, qs);
        } catch (const TrivialZero&) {
            threw = true;
        }
        ctx.check_exact("fourier/S11-trivial-zero-signal", threw);
        threw = false;
        try {
            limit_closed_form({1.0, 1, Trig::Cos, {}}, qs);
        } catch (const DivergentSum&) {
            threw = true;
        }
        ctx.check_exact("fourier/C11-divergent-signal", threw);
    }
}

// ------------------------------- zeta ------------------------------------

void suite_zeta(SuiteContext& ctx) {
    const QuadSpec qs = default_quad();
    for (unsigned k = 1; k <= 3; ++k) {
        const double tan_v = zeta_odd(k, ZetaRep::Tan, qs);
        const double cot_v = zeta_odd(k, ZetaRep::Cot, qs);
        const double bern_v = zeta_odd(k, ZetaRep::BernoulliCot, qs);
        const double ref = oracle::zeta_series(2.0 * k + 1.0).value;
        ctx.check("zeta/rep-tan-vs-cot-k" + std::to_string(k), tan_v, cot_v, 1e-8);
        ctx.check("zeta/rep-tan-vs-bcot-k" + std::to_string(k), tan_v, bern_v, 1e-8);
        ctx.check("zeta/tan-vs-series-k" + std::to_string(k), ref, tan_v, 1e-9);
        ctx.check("zeta/cot-vs-series-k" + std::to_string(k), ref, cot_v, 1e-9);
        ctx.check("zeta/bcot-vs-series-k" + std::to_string(k), ref, bern_v, 1e-9);
    }
    for (const double x : {0.1, 0.25, 0.5, 0.75}) {
        double even = 0.0, odd = 0.0;
        for (unsigned k = 1; k <= 60; ++k) {
            even += to_double(zeta_even_exact(k)) * std::pow(kPi * x, 2.0 * k);
            odd += oracle::zeta_series(2.0 * k + 1.0).value * std::pow(x, 2.0 * k + 1.0);
        }
        ctx.check("zeta/genfun-even-x" + std::to_string(x).substr(0, 4), even, zeta_genfun_even(x), 1e-8);
        ctx.check("zeta/genfun-odd-x" + std::to_string(x).substr(0, 4), odd, zeta_genfun_odd(x, qs),
                  1e-8);
    }
    for (unsigned r = 1; r <= 3; ++r)
        ctx.check("zeta/euler-even-zero-r" + std::to_string(r), 0.0, euler_sum_even_orders(0, r, qs),
                  1e-9);
    ctx.check("zeta/euler-odd-k0r1-2zeta3", 2.0 * oracle::zeta_series(3.0).value,
              euler_sum_odd_orders(0, 1, qs), 1e-8);
    ctx.check("zeta/euler-even-k1r1-brute", oracle::euler_sum_direct_even(1, 1).value,
              euler_sum_even_orders(1, 1, qs), 1e-6);
    ctx.check("zeta/euler-odd-k1r1-brute", oracle::euler_sum_direct_odd(1, 1).value,
              euler_sum_odd_orders(1, 1, qs), 1e-6);
    ctx.check("zeta/euler-odd-k0r2-brute", oracle::euler_sum_direct_odd(0, 2).value,
              euler_sum_odd_orders(0, 2, qs), 1e-6);
    // Euler's classical evaluation 3 zeta(5) - zeta(2) zeta(3) as a second witness
    ctx.check("zeta/euler-odd-k0r2-classical",
              3.0 * oracle::zeta_series(5.0).value -
                  oracle::zeta_series(2.0).value * oracle::zeta_series(3.0).value,
              euler_sum_odd_orders(0, 2, qs), 1e-8);
    for (const double x : {0.1, 0.3}) {
        const double psi_sum = -x * oracle::euler_gamma() -
                               0.5 * x * (oracle::digamma(1.0 + x).value + oracle::digamma(1.0 - x).value);
        ctx.check("zeta/genfun-odd-digamma-x" + std::to_string(x).substr(0, 3), psi_sum,
                  zeta_genfun_odd(x, qs), 1e-7, /*gating=*/false);
    }
}

// ------------------------------ limits -----------------------------------

void suite_limits(SuiteContext& ctx) {
    const QuadSpec qs = default_quad();
    struct Case {
        std::string id;
        std::function<double(double)> eval;  // value at n
        double limit;
        double m;        // for the 0.05*max(1,m) budget
        bool trend;      // exact-at-integer cases skip the ratio row
    };
    const double ln2 = std::log(2.0);
    std::vector<Case> cases = {
        {"thm1-k0-m1", [&](double n) { return theorem1_integral(0, 1.0, n, qs); }, 1.0, 1.0, false},
        {"thm1-k1-m2", [&](double n) { return theorem1_integral(1, 2.0, n, qs); }, 1.0, 2.0, true},
        {"thm1-k2-m3", [&](double n) { return theorem1_integral(2, 3.0, n, qs); }, 1.5, 3.0, true},
        {"thm2-k0-m2", [&](double n) { return theorem2_integral(0, 2.0, n, qs); }, 2.0 * ln2 / kPi, 2.0,
         true},
        {"thm2-k0-m4", [&](double n) { return theorem2_integral(0, 4.0, n, qs); },
         4.0 * std::log(4.0) / kPi, 4.0, true},
        {"thm2-k3-m1", [&](double n) { return theorem2_integral(3, 1.0, n, qs); }, 0.0, 1.0, true},
        {"thm3-k0", [&](double n) { return theorem3_integral(0, n, qs); }, 1.0, 1.0, false},
        {"thm3-k1", [&](double n) { return theorem3_integral(1, n, qs); }, 1.0, 1.0, true},
        {"thm3-k2", [&](double n) { return theorem3_integral(2, n, qs); }, 1.0, 1.0, true},
        {"thm3-k3", [&](double n) { return theorem3_integral(3, n, qs); }, 1.0, 1.0, true},
        {"thm4-p0", [&](double n) { return theorem4_integral(0, n, qs); }, -1.0, 1.0, false},
        {"thm4-p2", [&](double n) { return theorem4_integral(2, n, qs); }, -0.5, 1.0, true},
        {"thm4-p3", [&](double n) { return theorem4_integral(3, n, qs); }, -0.5, 1.0, true},
        {"cor1-k0", [&](double n) { return corollary1_integral(0, n, qs); }, 0.0, 1.0, true},
        {"cor1-k2", [&](double n) { return corollary1_integral(2, n, qs); }, 0.0, 1.0, true},
        {"cor1-k3", [&](double n) { return corollary1_integral(3, n, qs); }, 0.0, 1.0, true},
    };
    for (const unsigned k : {1u, 2u}) {
        // shrink along each doubling with the stated 1.5 slack
        double prev = std::fabs(theorem3_integral(k, 25.0, qs) - 1.0);
        for (const double n : {50.0, 100.0, 200.0}) {
            const double err = std::fabs(theorem3_integral(k, n, qs) - 1.0);
            ctx.check("limits/thm3-k" + std::to_string(k) + "-doubling-n" +
                          std::to_string(static_cast<int>(n)),
                      0.0, err, 1.5 * prev);
            prev = err;
        }
    }
    for (const auto& c : cases) {
        const double v200 = c.eval(200.0);
        const double e50 = std::fabs(c.eval(50.0) - c.limit);
        const double e200 = std::fabs(v200 - c.limit);
        ctx.check("limits/" + c.id + "-abs", c.limit, v200, 0.05 * std::max(1.0, c.m));
        if (c.trend)
            // 1e-9 floor keeps machine noise from failing limits that are
            // attained exactly at finite n
            ctx.check("limits/" + c.id + "-trend", 0.0, e200, std::max(e50 / 1.5, 1e-9));
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"exact", "harmonic", "fourier", "zeta", "limits"};
    return names;
}

std::vector<CheckRow> run_suite(const std::string& name, double tol_scale) {
    SuiteContext ctx{tol_scale, {}};
    if (name == "exact")
        suite_exact(ctx);
    else if (name == "harmonic")
        suite_harmonic(ctx);
    else if (name == "fourier")
        suite_fourier(ctx);
    else if (name == "zeta")
        suite_zeta(ctx);
    else if (name == "limits")
        suite_limits(ctx);
    else
        throw std::invalid_argument("unknown verify suite: " + name);
    return ctx.rows;
}

bool all_pass(const std::vector<CheckRow>& rows) {
    for (const auto& r : rows)
        if (r.gating && !r.pass) return false;
    return true;
}

}  // namespace harmonia::verify
