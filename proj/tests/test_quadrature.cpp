//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#include "airyscat/quadrature.hpp"

#include <cmath>
#include <complex>

#include <doctest.h>

using airyscat::quad::adaptive_gk15;
using airyscat::quad::gauss_hermite;
using Complex = std::complex<double>;

TEST_CASE("gk15 on smooth integrands")
{
    auto r = adaptive_gk15([](double x) { return Complex{std::exp(-x), 0.0}; },
                           0.0, 10.0, 0.0, 1e-12);
    CHECK(r.converged);
    CHECK(r.value.real() == doctest::Approx(1.0 - std::exp(-10.0)).epsilon(1e-12));

    r = adaptive_gk15([](double x) { return Complex{std::exp(-x * x), 0.0}; },
                      -6.0, 6.0, 0.0, 1e-12);
    CHECK(r.value.real() == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
}

TEST_CASE("gk15 on oscillatory integrands")
{
    const Complex i{0.0, 1.0};
    auto r = adaptive_gk15([&](double x) { return std::exp(i * 50.0 * x); }, 0.0,
                           1.0, 1e-14, 1e-12);
    Complex expect = (std::exp(i * 50.0) - 1.0) / (i * 50.0);
    CHECK(std::abs(r.value - expect) < 1e-11);

    // fast oscillation needs pre-subdivision for a trustworthy estimate
    r = adaptive_gk15([](double x) { return Complex{std::cos(200.0 * x), 0.0}; },
                      0.0, 1.0, 1e-14, 1e-11, 2000, 64);
    CHECK(r.converged);
    CHECK(r.value.real() == doctest::Approx(std::sin(200.0) / 200.0).epsilon(1e-9));
}

TEST_CASE("gk15 reports non-convergence")
{
    // |x|^{-1/2} endpoint singularity with far too few panels
    auto r = adaptive_gk15(
        [](double x) { return Complex{1.0 / std::sqrt(std::abs(x) + 1e-300), 0.0}; },
        0.0, 1.0, 0.0, 1e-14, 4);
    CHECK(!r.converged);
}

TEST_CASE("gauss-hermite rules")
{
    for (int n : {1, 2, 3, 5, 8, 17, 40, 80})
    {
        const auto& rule = gauss_hermite(n);
        REQUIRE(int(rule.nodes.size()) == n);
        double w_sum = 0.0;
        double m2 = 0.0;
        for (int i = 0; i < n; ++i)
        {
            w_sum += rule.weights[i];
            m2 += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
            if (i > 0)
                CHECK(rule.nodes[i] > rule.nodes[i - 1]);
            // symmetry of nodes and weights
            CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[n - 1 - i]).epsilon(1e-13));
            CHECK(rule.weights[i]
                  == doctest::Approx(rule.weights[n - 1 - i]).epsilon(1e-12));
        }
        CHECK(w_sum == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
        if (n >= 2)
            CHECK(m2 == doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-11));
    }

    // integral of exp(-x^2) cos(x) = sqrt(pi) exp(-1/4)
    const auto& rule = gauss_hermite(40);
    double sum = 0.0;
    for (int i = 0; i < 40; ++i)
        sum += rule.weights[i] * std::cos(rule.nodes[i]);
    CHECK(sum == doctest::Approx(std::sqrt(M_PI) * std::exp(-0.25)).epsilon(1e-13));

    CHECK_THROWS_AS(gauss_hermite(0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_hermite(1000), std::invalid_argument);
}
