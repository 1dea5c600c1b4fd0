#include <harmonia/exactq.hpp>
#include <harmonia/oracle.hpp>
#include <harmonia/zeta.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace harmonia;
namespace orc = harmonia::oracle;

namespace {
constexpr double kPi = std::numbers::pi;
const QuadSpec kQuad{};
}  // namespace

TEST_CASE("zeta odd representations agree with the series oracle") {
    for (unsigned k = 1; k <= 3; ++k) {
        const double ref = orc::zeta_series(2.0 * k + 1.0).value;
        const double tan_v = zeta_odd(k, ZetaRep::Tan, kQuad);
        const double cot_v = zeta_odd(k, ZetaRep::Cot, kQuad);
        const double bern_v = zeta_odd(k, ZetaRep::BernoulliCot, kQuad);
        CHECK(std::fabs(tan_v - ref) < 1e-9);
        CHECK(std::fabs(cot_v - ref) < 1e-9);
        CHECK(std::fabs(bern_v - ref) < 1e-9);
        CHECK(std::fabs(tan_v - cot_v) < 1e-8);
        CHECK(std::fabs(tan_v - bern_v) < 1e-8);
    }
    CHECK(zeta_odd(1, ZetaRep::Tan, kQuad) == doctest::Approx(1.2020569031595943).epsilon(1e-10));
    CHECK(zeta_odd(2, ZetaRep::BernoulliCot, kQuad) ==
          doctest::Approx(1.0369277551433699).epsilon(1e-10));
    CHECK_THROWS_AS(zeta_odd(0, ZetaRep::Tan, kQuad), std::domain_error);
}

TEST_CASE("even zeta generating function") {
    CHECK(zeta_genfun_even(0.5) == doctest::Approx(0.5).epsilon(1e-15));  // cos(pi/2) = 0
    CHECK(zeta_genfun_even(0.0) == 0.0);
    for (const double x : {0.1, 0.25, 0.5, 0.75}) {
        double series = 0.0;
        for (unsigned k = 1; k <= 80; ++k)
            series += to_double(zeta_even_exact(k)) * std::pow(kPi * x, 2.0 * k);
        CHECK(zeta_genfun_even(x) == doctest::Approx(series).epsilon(1e-12));
    }
    CHECK_THROWS_AS(zeta_genfun_even(1.0), std::domain_error);
    CHECK_THROWS_AS(zeta_genfun_even(-1.2), std::domain_error);
}

TEST_CASE("odd zeta generating function") {
    CHECK(zeta_genfun_odd(0.0, kQuad) == 0.0);
    for (const double x : {0.1, 0.25, 0.5}) {
        double series = 0.0;
        for (unsigned k = 1; k <= 60; ++k)
            series += orc::zeta_series(2.0 * k + 1.0).value * std::pow(x, 2.0 * k + 1.0);
        CHECK(zeta_genfun_odd(x, kQuad) == doctest::Approx(series).epsilon(1e-10));
    }
    // sum_k zeta(2k+1)/2^{2k+1} = ln 2 - 1/2, from the digamma reflection
    CHECK(zeta_genfun_odd(0.5, kQuad) == doctest::Approx(std::log(2.0) - 0.5).epsilon(1e-9));
    CHECK_THROWS_AS(zeta_genfun_odd(1.5, kQuad), std::domain_error);
}

TEST_CASE("odd generating function against the digamma form") {
    for (const double x : {0.1, 0.3}) {
        const double psi_form =
            -x * orc::euler_gamma() -
            0.5 * x * (orc::digamma(1.0 + x).value + orc::digamma(1.0 - x).value);
        CHECK(zeta_genfun_odd(x, kQuad) == doctest::Approx(psi_form).epsilon(1e-8));
    }
}

TEST_CASE("euler sums of even orders") {
    for (unsigned r = 1; r <= 3; ++r)
        CHECK(std::fabs(euler_sum_even_orders(0, r, kQuad)) < 1e-9);
    const auto brute = orc::euler_sum_direct_even(1, 1);
    CHECK(std::fabs(euler_sum_even_orders(1, 1, kQuad) - brute.value) < 1e-6);
    const auto brute22 = orc::euler_sum_direct_even(2, 1);
    CHECK(std::fabs(euler_sum_even_orders(2, 1, kQuad) - brute22.value) < 1e-6);
    CHECK_THROWS_AS(euler_sum_even_orders(1, 0, kQuad), std::domain_error);
}

TEST_CASE("euler sums of odd orders") {
    CHECK(euler_sum_odd_orders(0, 1, kQuad) ==
          doctest::Approx(2.0 * orc::zeta_series(3.0).value).epsilon(1e-10));
    CHECK(euler_sum_odd_orders(0, 2, kQuad) ==
          doctest::Approx(3.0 * orc::zeta_series(5.0).value -
                          orc::zeta_series(2.0).value * orc::zeta_series(3.0).value)
              .epsilon(1e-10));
    const auto brute = orc::euler_sum_direct_odd(1, 1);
    CHECK(std::fabs(euler_sum_odd_orders(1, 1, kQuad) - brute.value) < 1e-6);
    const auto brute02 = orc::euler_sum_direct_odd(0, 2);
    CHECK(std::fabs(euler_sum_odd_orders(0, 2, kQuad) - brute02.value) < 1e-6);
}
