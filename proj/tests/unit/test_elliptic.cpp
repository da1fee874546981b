#include "latwalk/elliptic.hpp"
#include "latwalk/error.hpp"
#include "latwalk/quadrature.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

using namespace latwalk;

namespace {

constexpr double pi = std::numbers::pi;
const DensityKind all_kinds[] = {DensityKind::aa, DensityKind::wa, DensityKind::ww};

} // namespace

TEST_SUITE("quadrature")
{
    TEST_CASE("smooth integrands")
    {
        CHECK(integrate([](double x) { return std::pow(x, 9); }, 0.0, 2.0).value ==
              doctest::Approx(102.4).epsilon(1e-14));
        CHECK(integrate([](double x) { return std::exp(x); }, 0.0, 1.0).value ==
              doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
        const auto r = integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0);
        CHECK(std::abs(r.value - 2.0 / 3.0) <= 1e-9);
        CHECK(r.evaluations > 0);
        CHECK(integrate([](double) { return 1.0; }, 3.0, 3.0).value == 0.0);
    }

    TEST_CASE("failures")
    {
        CHECK_THROWS_AS(integrate([](double x) { return std::sin(1e6 * x); }, 0.0, 1.0,
                                  QuadratureOptions{1e-14, 0.0, 200}),
                        NumericalFailure);
        CHECK_THROWS_AS(integrate([](double) { return std::numeric_limits<double>::quiet_NaN(); },
                                  0.0, 1.0),
                        NumericalFailure);
        CHECK_THROWS_AS(integrate([](double x) { return x; }, 0.0,
                                  std::numeric_limits<double>::infinity()),
                        InvalidParameter);
    }
}

TEST_SUITE("complete elliptic integrals")
{
    TEST_CASE("k = 0")
    {
        const auto e = elliptic_KE(0.0);
        CHECK(e.K == doctest::Approx(pi / 2).epsilon(1e-15));
        CHECK(e.E == doctest::Approx(pi / 2).epsilon(1e-15));
    }

    TEST_CASE("agreement with the defining integrals")
    {
        const double k = 1.0 / std::sqrt(2.0);
        const auto e = elliptic_KE(k);
        CHECK(std::abs(e.K - oracle::elliptic_K(k)) <= 1e-10);
        CHECK(std::abs(e.E - oracle::elliptic_E(k)) <= 1e-10);
        for (int i = 1; i <= 9; ++i) {
            const double kk = i / 10.0;
            CHECK(std::abs(elliptic_KE(kk).K - oracle::elliptic_K(kk)) <= 1e-10);
            CHECK(std::abs(elliptic_KE(kk).E - oracle::elliptic_E(kk)) <= 1e-10);
        }
    }

    TEST_CASE("Legendre relation")
    {
        for (int i = 1; i <= 9; ++i) {
            const double k = i / 10.0;
            const double kp = std::sqrt(1.0 - k * k);
            const auto a = elliptic_KE(k);
            const auto b = elliptic_KE(kp);
            CHECK(std::abs(a.K * b.E + b.K * a.E - a.K * b.K - pi / 2) <= 1e-11);
        }
    }

    TEST_CASE("K increases and E decreases in k")
    {
        double prev_k = 0.0;
        double prev_e = 2.0;
        for (int i = 0; i < 100; ++i) {
            const auto e = elliptic_KE(i / 100.0);
            CHECK(e.K > prev_k);
            CHECK(e.E < prev_e);
            CHECK(e.E <= e.K);
            prev_k = e.K;
            prev_e = e.E;
        }
    }

    TEST_CASE("complementary entry point agrees")
    {
        for (int i = 1; i <= 20; ++i) {
            const double kp = i / 20.0;
            const auto c = elliptic_KE_complementary(kp);
            if (kp < 1.0) {
                const auto d = elliptic_KE(std::sqrt(1.0 - kp * kp));
                CHECK(c.K == doctest::Approx(d.K).epsilon(1e-12));
                CHECK(c.E == doctest::Approx(d.E).epsilon(1e-12));
            }
        }
        // Small k' keeps full relative accuracy: K ~ ln(4/k').
        const auto tiny = elliptic_KE_complementary(1e-12);
        CHECK(tiny.K == doctest::Approx(std::log(4e12)).epsilon(1e-10));
    }

    TEST_CASE("domain errors")
    {
        CHECK_THROWS_AS(elliptic_KE(1.0), DomainError);
        CHECK_THROWS_AS(elliptic_KE(-0.1), DomainError);
        CHECK_THROWS_AS(elliptic_KE(std::numeric_limits<double>::quiet_NaN()), DomainError);
        CHECK_THROWS_AS(elliptic_KE_complementary(0.0), DomainError);
    }
}

TEST_SUITE("densities")
{
    TEST_CASE("values at the support edge")
    {
        CHECK(density(DensityKind::wa, 4.0) == 0.0);
        CHECK(density(DensityKind::aa, 4.0) == doctest::Approx(1.0 / (4.0 * pi)).epsilon(1e-15));
        CHECK(density(DensityKind::ww, 4.0) == doctest::Approx(0.0));
        for (auto kind : all_kinds) {
            CHECK(density(kind, 4.5) == 0.0);
            CHECK(density(kind, -7.0) == 0.0);
        }
    }

    TEST_CASE("the origin is a logarithmic singularity for all three kernels")
    {
        // Near 0: aa ~ ln(16/x)/(2 pi^2), wa ~ (ln(16/x) - 1)/pi^2, ww ~ 2(ln(16/x) - 2)/pi^2.
        for (auto kind : all_kinds) {
            CHECK(std::isinf(density(kind, 0.0)));
        }
        for (double x : {1e-4, 1e-6, 1e-8}) {
            const double l = std::log(16.0 / x);
            CHECK(density(DensityKind::aa, x) == doctest::Approx(l / (2 * pi * pi)).epsilon(1e-7));
            CHECK(density(DensityKind::wa, x) == doctest::Approx((l - 1) / (pi * pi)).epsilon(1e-7));
            CHECK(density(DensityKind::ww, x) == doctest::Approx(2 * (l - 2) / (pi * pi)).epsilon(1e-7));
        }
    }

    TEST_CASE("nonnegative and even")
    {
        for (int i = 1; i < 400; ++i) {
            const double x = -4.0 + 8.0 * i / 400.0;
            for (auto kind : all_kinds) {
                CHECK(density(kind, x) >= 0.0);
                CHECK(density(kind, x) == density(kind, -x));
            }
        }
    }

    TEST_CASE("Mellin convolution of the factor densities")
    {
        const auto [w, a] = density_factors(DensityKind::wa);
        for (double x : {0.5, 1.0, 2.0, 3.0, 3.9}) {
            CHECK(std::abs(mellin_density_convolve(w, a, x) - density(DensityKind::wa, x)) <= 1e-6);
        }
        CHECK(std::abs(mellin_density_convolve(arcsine_density, arcsine_density, 2.0) -
                       density(DensityKind::aa, 2.0)) <= 1e-6);
        CHECK(mellin_density_convolve(w, a, 4.5) == 0.0);
        CHECK(mellin_density_convolve(w, a, -1.0) == mellin_density_convolve(w, a, 1.0));
        CHECK_THROWS_AS(mellin_density_convolve(w, a, 0.0), InvalidParameter);
    }

    TEST_CASE("moments")
    {
        for (auto kind : all_kinds) {
            CHECK(std::abs(density_moment(kind, 0) - 1.0) <= 1e-8);
        }
        CHECK(density_moment(DensityKind::wa, 4) == doctest::Approx(12.0).epsilon(1e-6));
        CHECK(density_moment(DensityKind::ww, 4) == doctest::Approx(4.0).epsilon(1e-6));
        CHECK(density_moment(DensityKind::aa, 4) == doctest::Approx(36.0).epsilon(1e-6));
        CHECK_THROWS_AS(density_moment(DensityKind::aa, 3), InvalidParameter);
        CHECK_THROWS_AS(density_moment(DensityKind::aa, -2), InvalidParameter);
    }

    TEST_CASE("base densities integrate to one")
    {
        // Substitution x = 2 sin t removes the endpoint singularity of the arcsine law.
        const double a = oracle::simpson(
            [](double t) { return arcsine_density(2 * std::sin(t)) * 2 * std::cos(t); }, -pi / 2 + 1e-7,
            pi / 2 - 1e-7, 2000);
        CHECK(a == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(oracle::simpson(semicircle_density, -2.0, 2.0, 20000) ==
              doctest::Approx(1.0).epsilon(1e-6));
    }

    TEST_CASE("CSV samples")
    {
        std::ostringstream os;
        write_density_csv(os, DensityKind::aa, 3);
        CHECK(os.str() == "x,density\n-4,0.0795774715459477\n0,inf\n4,0.0795774715459477\n");
        std::ostringstream two;
        write_density_csv(two, DensityKind::ww, 2);
        CHECK(two.str() == "x,density\n-4,0\n4,0\n");
        CHECK_THROWS_AS(write_density_csv(os, DensityKind::aa, 1), InvalidParameter);
    }
}
