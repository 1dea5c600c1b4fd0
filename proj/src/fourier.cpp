#include <harmonia/fourier.hpp>
#include <harmonia/harmonic.hpp>
#include <harmonia/trig.hpp>
#include <harmonia/zeta.hpp>

#include <cmath>
#include <numbers>

namespace harmonia {

namespace {

constexpr double kPi = std::numbers::pi;

void validate(const FourierSpec& spec, bool finite) {
    if (!(spec.m >= 1.0)) throw std::domain_error("fourier: requires m >= 1");
    if (spec.k < 1) throw std::domain_error("fourier: requires order k >= 1");
    if (finite && (!spec.n || *spec.n < 1))
        throw std::domain_error("fourier: partial sum requires integer n >= 1");
}

double cot_pi_over_m(double u, double m) { return cospi(u / m) / sinpi(u / m); }

/// sin(2 pi n u / m), stable against the cot(pi u) pole at u = 1 when m = 1.
double sin_factor(double u, double n, double m, double s2n, double c2n) {
    if (m == 1.0 && u >= 0.5) {
        const double v = 1.0 - u;  // exact
        return s2n * cospi(2.0 * n * v) - c2n * sinpi(2.0 * n * v);
    }
    return sinpi(2.0 * n * u / m);
}

/// 1 - cos(2 pi n u / m), same consideration.
double one_minus_cos_factor(double u, double n, double m, double s2n, double c2n) {
    if (m == 1.0 && u >= 0.5) {
        const double v = 1.0 - u;
        if (s2n == 0.0 && c2n == 1.0) {  // integer n
            const double s = sinpi(n * v);
            return 2.0 * s * s;
        }
        return 1.0 - (c2n * cospi(2.0 * n * v) + s2n * sinpi(2.0 * n * v));
    }
    const double s = sinpi(n * u / m);
    return 2.0 * s * s;
}

/// H_{2j} or H_{2j+1} for the recursion terms, from the integral formula.
double h_value(unsigned k, double n, const QuadSpec& base) {
    if (k == 0) return 0.0;
    QuadSpec qs = base;
    qs.rel_tol = std::min(base.rel_tol, 1e-11);
    qs.abs_tol = std::min(base.abs_tol, 1e-13);
    qs.osc_frequency.reset();
    return h_integral(k, n, Variant::SinPiK, qs).value;
}

/// (1-u)^p - (1-u), stable near u = 0.
double power_minus_linear(double u, unsigned p) {
    return (1.0 - u) * std::expm1((static_cast<double>(p) - 1.0) * std::log1p(-u));
}

/// (1-u)^p cos(2 pi n u/m) cot(pi u/m) - m (1-u) cos(2 pi n u) cot(pi u) as a
/// single function; n = 0 drops the cosine factors. Near u = 0 the two poles
/// are combined through the Laurent split of cot before any floating-point
/// cancellation can occur.
double fused_cot_difference(double u, unsigned p, double m, double n) {
    if (u < 1e-4) {
        const double omu = 1.0 - u;
        const double powdiff = power_minus_linear(u, p);
        double a, b, a_minus_b;
        if (n == 0.0) {
            a = std::pow(omu, static_cast<double>(p));
            b = omu;
            a_minus_b = powdiff;
        } else {
            const double cos_a = cospi(2.0 * n * u / m);
            const double cos_b = cospi(2.0 * n * u);
            a = std::pow(omu, static_cast<double>(p)) * cos_a;
            b = omu * cos_b;
            const double cos_diff =
                -2.0 * sinpi(n * u * (1.0 / m + 1.0)) * sinpi(n * u * (1.0 / m - 1.0));
            a_minus_b = powdiff * cos_a + omu * cos_diff;
        }
        return (m / (kPi * u)) * a_minus_b + a * cot_minus_inv(kPi * u / m) -
               m * b * cot_minus_inv(kPi * u);
    }
    const double omu = 1.0 - u;
    const double a = std::pow(omu, static_cast<double>(p)) *
                     (n == 0.0 ? 1.0 : cospi(2.0 * n * u / m)) * cot_pi_over_m(u, m);
    const double b = m * omu * (n == 0.0 ? 1.0 : cospi(2.0 * n * u)) * cot_pi(u);
    return a - b;
}

/// int_0^1 (1-u)^p cot(pi u/m) - m (1-u) cot(pi u) du.
double regularized_integral(unsigned p, double m, const QuadSpec& base) {
    QuadSpec qs = base;
    qs.osc_frequency.reset();
    qs.left_endpoint = QuadSpec::Endpoint::RemovableSingularity;
    return integrate([&](double u) { return fused_cot_difference(u, p, m, 0.0); }, qs).value;
}

double zeta_even_value(unsigned j) {
    if (j == 0) return -0.5;
    return to_double(zeta_even_exact(j)) * std::pow(kPi, 2.0 * j);
}

double zeta_odd_value(unsigned j, const QuadSpec& base) {
    QuadSpec qs = base;
    qs.rel_tol = std::min(base.rel_tol, 1e-12);
    qs.abs_tol = std::min(base.abs_tol, 1e-13);
    qs.osc_frequency.reset();
    return zeta_odd(j, ZetaRep::Tan, qs);
}

}  // namespace

double partial_sum(const FourierSpec& spec, const QuadSpec& quad) {
    validate(spec, true);
    const double m = spec.m;
    const double n = static_cast<double>(*spec.n);
    const double w = 2.0 * kPi / m;
    const double z = 2.0 * n / m;  // trig arguments are pi * z * (...)
    const double s2n = sinpi(z);
    const double c2n = cospi(z);

    QuadSpec qs = quad;
    if (!qs.osc_frequency) qs.osc_frequency = z;
    qs.left_endpoint = QuadSpec::Endpoint::RemovableSingularity;
    if (m == 1.0) qs.right_endpoint = QuadSpec::Endpoint::RemovableSingularity;

    const unsigned kappa = spec.k;
    const unsigned K = kappa / 2;  // formula index: kappa = 2K or 2K+1
    const double npow = 0.5 * std::pow(n, -static_cast<double>(kappa));
    const double zn = kPi * z;  // 2 pi n / m

    double boundary, hsum = 0.0, integral;
    if (spec.trig == Trig::Cos && kappa % 2 == 0) {
        // C^m_{2K}
        double taylor = 0.0, t = 1.0;
        for (unsigned j = 0; j <= K; ++j) {
            taylor += t;
            t *= -zn * zn / ((2.0 * j + 1.0) * (2.0 * j + 2.0));
        }
        boundary = npow * (cospi(z) - taylor);
        for (unsigned j = 0; j <= K; ++j) {
            const int sgn = (K - j) % 2 == 0 ? 1 : -1;
            hsum += sgn * std::pow(w, 2.0 * (K - j)) / to_double(factorial(2 * (K - j))) *
                    h_value(2 * j, n, quad);
        }
        const QuadResult qr = integrate(
            [&](double u) {
                return std::pow(1.0 - u, 2.0 * K - 1.0) * sin_factor(u, n, m, s2n, c2n) *
                       cot_pi_over_m(u, m);
            },
            qs);
        const int sgn = K % 2 == 0 ? 1 : -1;
        integral = sgn * std::pow(w, 2.0 * K) / (2.0 * to_double(factorial(2 * K - 1))) * qr.value;
    } else if (spec.trig == Trig::Sin && kappa % 2 == 1) {
        // S^m_{2K+1}
        double taylor = 0.0, t = zn;
        for (unsigned j = 0; j <= K; ++j) {
            taylor += t;
            t *= -zn * zn / ((2.0 * j + 2.0) * (2.0 * j + 3.0));
        }
        boundary = npow * (sinpi(z) - taylor);
        for (unsigned j = 0; j <= K; ++j) {
            const int sgn = (K - j) % 2 == 0 ? 1 : -1;
            hsum += sgn * std::pow(w, 2.0 * (K - j) + 1.0) / to_double(factorial(2 * (K - j) + 1)) *
                    h_value(2 * j, n, quad);
        }
        const QuadResult qr = integrate(
            [&](double u) {
                return std::pow(1.0 - u, 2.0 * K) * sin_factor(u, n, m, s2n, c2n) *
                       cot_pi_over_m(u, m);
            },
            qs);
        const int sgn = K % 2 == 0 ? 1 : -1;
        integral = sgn * std::pow(w, 2.0 * K + 1.0) / (2.0 * to_double(factorial(2 * K))) * qr.value;
    } else if (spec.trig == Trig::Cos) {
        // C^m_{2K+1}
        double taylor = 0.0, t = 1.0;
        for (unsigned j = 0; j <= K; ++j) {
            taylor += t;
            t *= -zn * zn / ((2.0 * j + 1.0) * (2.0 * j + 2.0));
        }
        boundary = npow * (cospi(z) - taylor);
        for (unsigned j = 0; j <= K; ++j) {
            const int sgn = (K - j) % 2 == 0 ? 1 : -1;
            hsum += sgn * std::pow(w, 2.0 * (K - j)) / to_double(factorial(2 * (K - j))) *
                    h_value(2 * j + 1, n, quad);
        }
        const QuadResult qr = integrate(
            [&](double u) {
                return std::pow(1.0 - u, 2.0 * K) * one_minus_cos_factor(u, n, m, s2n, c2n) *
                       cot_pi_over_m(u, m);
            },
            qs);
        const int sgn = K % 2 == 0 ? 1 : -1;
        integral = -sgn * std::pow(w, 2.0 * K + 1.0) / (2.0 * to_double(factorial(2 * K))) * qr.value;
    } else {
        // S^m_{2K}
        double taylor = 0.0, t = zn;
        for (unsigned j = 0; j + 1 <= K; ++j) {
            taylor += t;
            t *= -zn * zn / ((2.0 * j + 2.0) * (2.0 * j + 3.0));
        }
        boundary = npow * (sinpi(z) - taylor);
        for (unsigned j = 0; j + 1 <= K; ++j) {
            const int sgn = (K - j) % 2 == 0 ? 1 : -1;
            hsum -= sgn * std::pow(w, 2.0 * (K - j) - 1.0) / to_double(factorial(2 * (K - j) - 1)) *
                    h_value(2 * j + 1, n, quad);
        }
        const QuadResult qr = integrate(
            [&](double u) {
                return std::pow(1.0 - u, 2.0 * K - 1.0) * one_minus_cos_factor(u, n, m, s2n, c2n) *
                       cot_pi_over_m(u, m);
            },
            qs);
        const int sgn = K % 2 == 0 ? 1 : -1;
        integral = sgn * std::pow(w, 2.0 * K) / (2.0 * to_double(factorial(2 * K - 1))) * qr.value;
    }
    return boundary + hsum + integral;
}

double limit_closed_form(const FourierSpec& spec, const QuadSpec& quad) {
    validate(spec, false);
    const double m = spec.m;
    const double w = 2.0 * kPi / m;
    const unsigned kappa = spec.k;

    if (spec.trig == Trig::Sin && kappa == 1 && m == 1.0)
        throw TrivialZero("S^1_1: every term vanishes; the closed form is excluded");
    if (spec.trig == Trig::Cos && kappa == 1 && m == 1.0)
        throw DivergentSum("C^1_1: the sum is the harmonic series and diverges");

    if (spec.trig == Trig::Cos && kappa % 2 == 0) {
        const unsigned K = kappa / 2;
        double acc = 0.0;
        for (unsigned j = 0; j <= K; ++j) {
            const int sgn = (K - j) % 2 == 0 ? 1 : -1;
            acc += sgn * std::pow(w, 2.0 * (K - j)) / to_double(factorial(2 * (K - j))) *
                   zeta_even_value(j);
        }
        const int sgn = K % 2 == 0 ? 1 : -1;
        return acc + sgn * m / (4.0 * to_double(factorial(2 * K - 1))) * std::pow(w, 2.0 * K);
    }
    if (spec.trig == Trig::Sin && kappa % 2 == 1) {
        const unsigned K = (kappa - 1) / 2;
        double acc = 0.0;
        for (unsigned j = 0; j <= K; ++j) {
            const int sgn = (K - j) % 2 == 0 ? 1 : -1;
            acc += sgn * std::pow(w, 2.0 * (K - j) + 1.0) / to_double(factorial(2 * (K - j) + 1)) *
                   zeta_even_value(j);
        }
        const int sgn = K % 2 == 0 ? 1 : -1;
        return acc + sgn * m / (4.0 * to_double(factorial(2 * K))) * std::pow(w, 2.0 * K + 1.0);
    }
    if (spec.trig == Trig::Cos) {
        const unsigned K = (kappa - 1) / 2;
        double acc = 0.0;
        for (unsigned j = 1; j <= K; ++j) {
            const int sgn = (K - j) % 2 == 0 ? 1 : -1;
            acc += sgn * std::pow(w, 2.0 * (K - j)) / to_double(factorial(2 * (K - j))) *
                   zeta_odd_value(j, quad);
        }
        const int sgn = K % 2 == 0 ? 1 : -1;
        acc += sgn * std::log(m) * std::pow(w, 2.0 * K) / to_double(factorial(2 * K));
        return acc - sgn * std::pow(w, 2.0 * K + 1.0) / (2.0 * to_double(factorial(2 * K))) *
                         regularized_integral(2 * K, m, quad);
    }
    const unsigned K = kappa / 2;
    double acc = 0.0;
    for (unsigned j = 1; j + 1 <= K; ++j) {
        const int sgn = (K - j) % 2 == 0 ? 1 : -1;
        acc -= sgn * std::pow(w, 2.0 * (K - j) - 1.0) / to_double(factorial(2 * (K - j) - 1)) *
               zeta_odd_value(j, quad);
    }
    const int sgn = K % 2 == 0 ? 1 : -1;
    acc -= sgn * std::log(m) * std::pow(w, 2.0 * K - 1.0) / to_double(factorial(2 * K - 1));
    return acc + sgn * std::pow(w, 2.0 * K) / (2.0 * to_double(factorial(2 * K - 1))) *
                     regularized_integral(2 * K - 1, m, quad);
}

double limit_bernoulli_form(const FourierSpec& spec) {
    validate(spec, false);
    const double inv_m = 1.0 / spec.m;
    if (spec.trig == Trig::Cos && spec.k % 2 == 0) {
        const unsigned K = spec.k / 2;
        const double b = horner(bernoulli_polynomial(2 * K).coeffs_as_double(), inv_m);
        const int sgn = K % 2 == 0 ? 1 : -1;
        return -sgn * std::pow(2.0 * kPi, 2.0 * K) / (2.0 * to_double(factorial(2 * K))) * b;
    }
    if (spec.trig == Trig::Sin && spec.k % 2 == 1) {
        const unsigned K = (spec.k - 1) / 2;
        const double b = horner(bernoulli_polynomial(2 * K + 1).coeffs_as_double(), inv_m);
        // (-1)^{K+1}: the A&S/DLMF sign, confirmed against the direct sums
        const int sgn = K % 2 == 0 ? -1 : 1;
        return sgn * std::pow(2.0 * kPi, 2.0 * K + 1.0) / (2.0 * to_double(factorial(2 * K + 1))) * b;
    }
    throw std::domain_error("limit_bernoulli_form: only (Cos, even) and (Sin, odd) have one");
}

double theorem1_integral(unsigned k, double m, double n, const QuadSpec& quad) {
    if (!(m >= 1.0)) throw std::domain_error("theorem1_integral: requires m >= 1");
    if (!(n >= 1.0)) throw std::domain_error("theorem1_integral: requires n >= 1");
    const double s2n = sinpi(2.0 * n / m);
    const double c2n = cospi(2.0 * n / m);
    QuadSpec qs = quad;
    if (!qs.osc_frequency) qs.osc_frequency = 2.0 * n / m;
    qs.left_endpoint = QuadSpec::Endpoint::RemovableSingularity;
    return integrate(
               [&](double u) {
                   return std::pow(1.0 - u, static_cast<double>(k)) *
                          sin_factor(u, n, m, s2n, c2n) * cot_pi_over_m(u, m);
               },
               qs)
        .value;
}

double theorem2_integral(unsigned k, double m, double n, const QuadSpec& quad) {
    if (!(m >= 1.0)) throw std::domain_error("theorem2_integral: requires m >= 1");
    if (k == 0 && m == 1.0) throw std::domain_error("theorem2_integral: excluded at k = 0, m = 1");
    QuadSpec qs = quad;
    if (!qs.osc_frequency) qs.osc_frequency = 2.0 * n;
    qs.left_endpoint = QuadSpec::Endpoint::RemovableSingularity;
    return integrate([&](double u) { return fused_cot_difference(u, k, m, n); }, qs).value;
}

double corollary1_integral(unsigned k, double n, const QuadSpec& quad) {
    QuadSpec qs = quad;
    if (!qs.osc_frequency) qs.osc_frequency = n;
    qs.right_endpoint = QuadSpec::Endpoint::RemovableSingularity;
    const double s_n = sinpi(n);
    const double c_n = cospi(n);
    const auto poly = [&](double u) {
        // u^k - u without cancellation near the root at u = 1
        if (u < 0.5) return std::pow(u, static_cast<double>(k)) - u;
        return u * std::expm1((static_cast<double>(k) - 1.0) * std::log1p(u - 1.0));
    };
    const auto cos_term = [&](double u) {
        if (u >= 0.5) return cospi(n * (1.0 - u));
        return c_n * cospi(n * u) + s_n * sinpi(n * u);
    };
    return integrate([&](double u) { return poly(u) * cos_term(u) * tan_pi_half(u); }, qs).value;
}

}  // namespace harmonia
