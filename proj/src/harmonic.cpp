#include <harmonia/harmonic.hpp>
#include <harmonia/polyq.hpp>
#include <harmonia/trig.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace harmonia {

namespace detail {

OscFactor::OscFactor(double q_) : q(q_), s_q(sinpi(q_)), c_q(cospi(q_)) {}

double OscFactor::sin_term(double u) const {
    if (u >= 0.5) return sinpi(q * (1.0 - u));  // 1-u exact here
    return s_q * cospi(q * u) - c_q * sinpi(q * u);
}

double OscFactor::one_minus_cos(double u) const {
    if (u >= 0.5) {
        const double s = sinpi(0.5 * q * (1.0 - u));
        return 2.0 * s * s;
    }
    if (s_q == 0.0 && c_q == 1.0) {  // q an even integer: 1 - cos(pi q u)
        const double s = sinpi(0.5 * q * u);
        return 2.0 * s * s;
    }
    if (s_q == 0.0 && c_q == -1.0) {  // q an odd integer: 1 + cos(pi q u)
        const double c = cospi(0.5 * q * u);
        return 2.0 * c * c;
    }
    return 1.0 - (c_q * cospi(q * u) + s_q * sinpi(q * u));
}

}  // namespace detail

namespace {

using detail::OscFactor;

struct Formula {
    std::vector<double> kernel;  // double image of the exact kernel polynomial
    double multiplier;
    Variant variant;
    Parity parity;
};

Formula make_formula(unsigned k, Variant variant) {
    const Parity parity = (k % 2 == 0) ? Parity::Even : Parity::Odd;
    const unsigned idx = k / 2;  // p_{2 idx} or p_{2 idx + 1}
    Formula f;
    f.variant = variant;
    f.parity = parity;
    f.kernel = kernel_poly({parity, variant}, idx).coeffs_as_double();
    const double pi = std::numbers::pi;
    switch (variant) {
        case Variant::SinPiK: f.multiplier = 0.5 * std::pow(pi, k); break;
        case Variant::Sin2PiK: f.multiplier = -0.5 * std::pow(2.0 * pi, k); break;
        case Variant::Cos2PiK: f.multiplier = std::pow(pi, k); break;
    }
    return f;
}

}  // namespace

HarmonicEval h_integral(unsigned k, double n, Variant variant, const QuadSpec& spec) {
    if (!(n > 0.0)) throw std::domain_error("h_integral: requires n > 0");
    if (variant == Variant::Cos2PiK && k == 0)
        throw std::domain_error("h_integral: order 0 is not available for the cos-seeded variant");

    const Formula f = make_formula(k, variant);
    QuadSpec qs = spec;
    const bool half_weight = variant == Variant::SinPiK;
    if (!qs.osc_frequency) qs.osc_frequency = half_weight ? n : 2.0 * n;
    qs.right_endpoint = QuadSpec::Endpoint::RemovableSingularity;
    if (!half_weight) qs.left_endpoint = QuadSpec::Endpoint::RemovableSingularity;

    const OscFactor osc(half_weight ? n : 2.0 * n);
    const auto weight = [&](double u) {
        const double trig = f.parity == Parity::Even ? osc.sin_term(u) : osc.one_minus_cos(u);
        return trig * (half_weight ? tan_pi_half(u) : cot_pi(u));
    };
    const QuadResult qr = integrate([&](double u) { return horner(f.kernel, u) * weight(u); }, qs);

    HarmonicEval out;
    out.k = k;
    out.n = n;
    out.variant = variant;
    out.quad = qr;
    out.value = 0.5 * std::pow(n, -static_cast<double>(k)) + f.multiplier * qr.value;
    return out;
}

double h_zero_check(unsigned n, const QuadSpec& spec) {
    if (n < 1) throw std::domain_error("h_zero_check: requires integer n >= 1");
    return std::fabs(h_integral(0, static_cast<double>(n), Variant::SinPiK, spec).value);
}

double genfun_even(double n, double x, const QuadSpec& spec) {
    if (!(n > 0.0)) throw std::domain_error("genfun_even: requires n > 0");
    if (!(std::fabs(x) < 1.0)) throw std::domain_error("genfun_even: requires |x| < 1");
    if (x == n || x == -n) throw std::domain_error("genfun_even: pole at x = +-n");
    const double head = n * n / (2.0 * (n * n - x * x));
    if (x == 0.0) return head;  // the x-factor in front of the integral vanishes
    QuadSpec qs = spec;
    if (!qs.osc_frequency) qs.osc_frequency = n + std::fabs(x);
    qs.right_endpoint = QuadSpec::Endpoint::RemovableSingularity;
    const OscFactor osc(n);
    const QuadResult qr = integrate(
        [&](double u) { return cospi(x * u) * osc.sin_term(u) * tan_pi_half(u); }, qs);
    const double pi = std::numbers::pi;
    return head - pi * x / (2.0 * sinpi(x)) * qr.value;
}

double genfun_odd(double n, double x, const QuadSpec& spec) {
    if (!(n > 0.0)) throw std::domain_error("genfun_odd: requires n > 0");
    if (!(std::fabs(x) < 1.0)) throw std::domain_error("genfun_odd: requires |x| < 1");
    if (x == n || x == -n) throw std::domain_error("genfun_odd: pole at x = +-n");
    if (x == 0.0) return 0.0;
    const double head = n * x / (2.0 * (n * n - x * x));
    QuadSpec qs = spec;
    if (!qs.osc_frequency) qs.osc_frequency = n + std::fabs(x);
    qs.right_endpoint = QuadSpec::Endpoint::RemovableSingularity;
    const OscFactor osc(n);
    const QuadResult qr = integrate(
        [&](double u) { return sinpi(x * u) * osc.one_minus_cos(u) * tan_pi_half(u); }, qs);
    const double pi = std::numbers::pi;
    return head + pi * x / (2.0 * sinpi(x)) * qr.value;
}

double theorem3_integral(unsigned k, double n, const QuadSpec& spec) {
    if (!(n > 0.0)) throw std::domain_error("theorem3_integral: requires n > 0");
    QuadSpec qs = spec;
    if (!qs.osc_frequency) qs.osc_frequency = n;
    qs.right_endpoint = QuadSpec::Endpoint::RemovableSingularity;
    const OscFactor osc(n);
    const double p = 2.0 * k;
    return integrate([&](double u) { return std::pow(u, p) * osc.sin_term(u) * tan_pi_half(u); }, qs)
        .value;
}

double theorem4_integral(unsigned power, double n, const QuadSpec& spec) {
    if (!(n > 0.0)) throw std::domain_error("theorem4_integral: requires n > 0");
    QuadSpec qs = spec;
    if (!qs.osc_frequency) qs.osc_frequency = 2.0 * n;
    qs.left_endpoint = QuadSpec::Endpoint::RemovableSingularity;
    qs.right_endpoint = QuadSpec::Endpoint::RemovableSingularity;
    const OscFactor osc(2.0 * n);
    const double p = power;
    return integrate([&](double u) { return std::pow(u, p) * osc.sin_term(u) * cot_pi(u); }, qs).value;
}

}  // namespace harmonia
