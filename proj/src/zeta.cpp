#include <harmonia/exactq.hpp>
#include <harmonia/polyq.hpp>
#include <harmonia/trig.hpp>
#include <harmonia/zeta.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace harmonia {

namespace {

constexpr double kPi = std::numbers::pi;

QuadSpec smooth_spec(const QuadSpec& base) {
    QuadSpec qs = base;
    qs.osc_frequency.reset();
    qs.left_endpoint = QuadSpec::Endpoint::RemovableSingularity;
    qs.right_endpoint = QuadSpec::Endpoint::RemovableSingularity;
    return qs;
}

}  // namespace

const char* to_string(ZetaRep rep) {
    switch (rep) {
        case ZetaRep::Tan: return "tan";
        case ZetaRep::Cot: return "cot";
        case ZetaRep::BernoulliCot: return "bernoulli-cot";
    }
    return "?";
}

double zeta_odd(unsigned k, ZetaRep rep, const QuadSpec& quad) {
    if (k < 1) throw std::domain_error("zeta_odd: requires k >= 1");
    const QuadSpec qs = smooth_spec(quad);
    switch (rep) {
        case ZetaRep::Tan: {
            const auto c = kernel_poly({Parity::Odd, Variant::SinPiK}, k).coeffs_as_double();
            const QuadResult qr =
                integrate([&](double u) { return horner(c, u) * tan_pi_half(u); }, qs);
            return 0.5 * std::pow(kPi, 2.0 * k + 1.0) * qr.value;
        }
        case ZetaRep::Cot: {
            // the kernel vanishes at both endpoints (Theorem-7 zero at u = 1)
            const auto c = kernel_poly({Parity::Odd, Variant::SinPiK}, k).coeffs_as_double();
            const QuadResult qr = integrate([&](double u) { return horner(c, u) * cot_pi(u); }, qs);
            return -0.5 * std::pow(2.0 * kPi, 2.0 * k + 1.0) * qr.value;
        }
        case ZetaRep::BernoulliCot: {
            const auto c = bernoulli_polynomial(2 * k + 1).coeffs_as_double();
            const QuadResult qr = integrate([&](double u) { return horner(c, u) * cot_pi(u); }, qs);
            const int sgn = k % 2 == 0 ? 1 : -1;
            return -sgn * std::pow(2.0 * kPi, 2.0 * k + 1.0) /
                   (2.0 * to_double(factorial(2 * k + 1))) * qr.value;
        }
    }
    throw std::invalid_argument("zeta_odd: unknown representation");
}

double zeta_genfun_even(double x) {
    if (!(std::fabs(x) < 1.0)) throw std::domain_error("zeta_genfun_even: requires |x| < 1");
    if (x == 0.0) return 0.0;
    return 0.5 - 0.5 * kPi * x * cospi(x) / sinpi(x);
}

double zeta_genfun_odd(double x, const QuadSpec& quad) {
    if (!(std::fabs(x) < 1.0)) throw std::domain_error("zeta_genfun_odd: requires |x| < 1");
    if (x == 0.0) return 0.0;
    const double sx = sinpi(x);
    const double cx = cospi(x);
    QuadSpec qs = quad;
    qs.osc_frequency.reset();
    qs.right_endpoint = QuadSpec::Endpoint::RemovableSingularity;
    // integrand as the product form (sin(pi x u) - u sin(pi x)) tan(pi u/2)/sin(pi x);
    // the bracket vanishes at u = 1 against the tan pole. Close to u = 1 the
    // first-order expansion of the bracket avoids the 0 * inf evaluation.
    const QuadResult qr = integrate(
        [&](double u) {
            const double v = 1.0 - u;
            double bracket;
            if (v < 1e-6) {
                bracket = v * (sx - kPi * x * cx);
            } else if (u >= 0.5) {
                const double sh = sinpi(0.5 * x * v);
                bracket = -2.0 * sx * sh * sh - cx * sinpi(x * v) + v * sx;
            } else {
                bracket = sinpi(x * u) - u * sx;
            }
            return bracket * tan_pi_half(u) / sx;
        },
        qs);
    return 0.5 * kPi * x * qr.value;
}

double euler_sum_even_orders(unsigned k, unsigned r, const QuadSpec& quad) {
    if (r < 1) throw std::domain_error("euler_sum_even_orders: requires r >= 1");
    const QuadSpec qs = smooth_spec(quad);
    // front zeta(2k+2r+1) from the odd-zeta representation keeps the module
    // self-contained
    const double zfront = zeta_odd(k + r, ZetaRep::Tan, quad);
    const PolyQ product = bernoulli_kernel_form(2 * k) * bernoulli_polynomial(2 * r + 1);
    const auto c = product.coeffs_as_double();
    const QuadResult qr = integrate([&](double u) { return horner(c, u) * cot_pi(u); }, qs);
    const int sgn = (k + r) % 2 == 0 ? 1 : -1;
    const double coeff = sgn * std::pow(2.0 * kPi, 2.0 * (k + r) + 1.0) /
                         (2.0 * to_double(factorial(2 * k) * factorial(2 * r + 1)));
    return 0.5 * zfront + coeff * qr.value;
}

double euler_sum_odd_orders(unsigned k, unsigned r, const QuadSpec& quad) {
    if (r < 1) throw std::domain_error("euler_sum_odd_orders: requires r >= 1");
    const QuadSpec qs = smooth_spec(quad);
    const double zfront = zeta_odd(k + r, ZetaRep::Tan, quad);
    // zeta(2r) + (-1)^r (2 pi)^{2r} B_{2r}(u) / (2 (2r)!) rewritten exactly as
    // a multiple of B_{2r}(u) - B_{2r}, which vanishes at both endpoints.
    PolyQ centered = bernoulli_polynomial(2 * r);
    centered -= PolyQ{bernoulli_number(2 * r)};
    const PolyQ product = bernoulli_kernel_form(2 * k + 1) * centered;
    const auto c = product.coeffs_as_double();
    const int sgn_r = r % 2 == 0 ? 1 : -1;
    const double weight_coeff = sgn_r * std::pow(2.0 * kPi, 2.0 * r) / (2.0 * to_double(factorial(2 * r)));
    const QuadResult qr = integrate([&](double u) { return horner(c, u) * cot_pi(u); }, qs);
    const int sgn_k = k % 2 == 0 ? 1 : -1;
    const double coeff = -sgn_k * std::pow(2.0 * kPi, 2.0 * k + 1.0) / to_double(factorial(2 * k + 1));
    return 0.5 * zfront + coeff * weight_coeff * qr.value;
}

}  // namespace harmonia
