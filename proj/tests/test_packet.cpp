//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#include "airyscat/packet.hpp"

#include <cmath>
#include <random>

#include <doctest.h>

#include "airyscat/quadrature.hpp"

using namespace airyscat;

TEST_CASE("packet construction enforces invariants")
{
    auto p = AiryPacketParams::make(1.5, 50.0, 3.0, 3.0, 1.0, -2.0);
    CHECK(p.norm == doctest::Approx(3.0));
    CHECK_THROWS_AS(AiryPacketParams::make(0.0, 50, 2, 2, 0, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(AiryPacketParams::make(1.0, -1, 2, 2, 0, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(AiryPacketParams::make(1.0, 50, -2, 2, 0, 0),
                    std::invalid_argument);
}

TEST_CASE("kinematics construction")
{
    auto k = BeamKinematics::make(10.0, 0.0);
    CHECK(k.p_f == doctest::Approx(10.0));
    CHECK(k.theta_k == doctest::Approx(0.0));
    auto k2 = BeamKinematics::make(3.0, 4.0);
    CHECK(k2.p_f == doctest::Approx(5.0));
    CHECK(std::tan(k2.theta_k) == doctest::Approx(4.0 / 3.0));
    CHECK_THROWS_AS(BeamKinematics::make(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("momentum wavefunction")
{
    auto p = AiryPacketParams::make(1.0, 50.0, 2.0, 2.0, 0.0, 0.0);
    CHECK(momentum_wavefunction(p, 0.0, 0.0) == Complex{2.0, 0.0});

    // modulus independent of xi and b
    auto p2 = AiryPacketParams::make(1.0, 50.0, 0.7, 2.9, 5.0, -3.0);
    for (double kx : {-0.8, 0.0, 1.3})
        for (double ky : {-0.4, 0.6})
            CHECK(std::abs(momentum_wavefunction(p, kx, ky))
                  == doctest::Approx(std::abs(momentum_wavefunction(p2, kx, ky)))
                         .epsilon(1e-13));
}

TEST_CASE("momentum-space normalization")
{
    // integral of |Phi|^2 d2k / (2 pi) = 1 for any (sigma, xi, b)
    for (double sigma : {0.5, 1.0, 4.0})
    {
        auto p = AiryPacketParams::make(sigma, 50.0, 2.0 * sigma, 1.3 * sigma,
                                        3.0, -1.0);
        double box = 8.0 / sigma;
        auto inner = [&](double kx) {
            auto f = [&](double ky) {
                return Complex{std::norm(momentum_wavefunction(p, kx, ky)), 0.0};
            };
            return quad::adaptive_gk15(f, -box, box, 1e-14, 1e-11).value;
        };
        auto total = quad::adaptive_gk15(inner, -box, box, 1e-14, 1e-11);
        CHECK(total.value.real() / (2.0 * M_PI) == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("effective spatial wavefunction at s = 0")
{
    auto p = AiryPacketParams::make(1.0, 50.0, 2.0, 2.0, 0.0, 0.0);
    double x = 1.7;
    double y = -0.4;
    Complex psi = effective_spatial_wavefunction(p, x, y, 0.0, {}, 1.0);

    // each factor reduces to the real-argument Airy form
    // exp((2/3)rho^6 - rho^2 x/xi) Ai(-x/xi + sigma^4/xi^4)
    double pref = p.norm * std::pow(2.0 * M_PI, 2.0) / (p.xi_x * p.xi_y);
    double argx = -x / p.xi_x + std::pow(p.sigma_perp, 4.0) / std::pow(p.xi_x, 4.0);
    double argy = -y / p.xi_y + std::pow(p.sigma_perp, 4.0) / std::pow(p.xi_y, 4.0);
    double rho2 = std::pow(p.sigma_perp / p.xi_x, 2.0);
    double ex = 2.0 / 3.0 * rho2 * rho2 * rho2 - rho2 * x / p.xi_x;
    double ey = 2.0 / 3.0 * rho2 * rho2 * rho2 - rho2 * y / p.xi_y;
    Complex expect
        = pref * std::exp(ex + ey) * airy_ai({argx, 0.0}) * airy_ai({argy, 0.0});
    CHECK(std::abs(psi - expect) < 1e-12 * std::abs(expect));
    CHECK(std::abs(psi.imag()) < 1e-12 * std::abs(psi));
}

TEST_CASE("spatial wavefunction vanishes at type-1 special points")
{
    auto p = AiryPacketParams::make(1.0, 50.0, 2.0, 2.0, 0.0, 0.0);
    double peak = std::abs(effective_spatial_wavefunction(p, 0.0, 0.0, 0.0, {}, 1.0));
    for (int n : {1, 2, 3})
    {
        auto sp = special_point(p, n, n);
        Complex psi = effective_spatial_wavefunction(p, sp.b_x, sp.b_y, 0.0, {}, 1.0);
        CHECK(std::abs(psi) < 1e-10 * peak);
    }
}

TEST_CASE("spatial wavefunction axis-swap symmetry")
{
    auto p = AiryPacketParams::make(1.0, 50.0, 2.0, 1.1, 0.0, 0.0);
    auto ps = AiryPacketParams::make(1.0, 50.0, 1.1, 2.0, 0.0, 0.0);
    for (double s : {0.0, 2.5})
    {
        Complex a = effective_spatial_wavefunction(p, 1.2, -0.3, s, {}, 1.0);
        Complex b = effective_spatial_wavefunction(ps, -0.3, 1.2, s, {}, 1.0);
        CHECK(std::abs(a) == doctest::Approx(std::abs(b)).epsilon(1e-12));
    }
}

TEST_CASE("gaussian limit of the spatial wavefunction")
{
    double sigma = 1.0;
    auto tiny = AiryPacketParams::make(sigma, 50.0, 1e-2 * sigma, 1e-2 * sigma,
                                       0.0, 0.0);
    auto zero = AiryPacketParams::make(sigma, 50.0, 0.0, 0.0, 0.0, 0.0);
    for (double x : {0.0, 0.3, 0.8})
    {
        double da = std::norm(effective_spatial_wavefunction(tiny, x, 0.1, 0.0, {}, 1.0));
        double dg = std::norm(effective_spatial_wavefunction(zero, x, 0.1, 0.0, {}, 1.0));
        CHECK(da == doctest::Approx(dg).epsilon(1e-3));
    }
    // xi = 0 path is the exact normalized Gaussian profile
    double d0 = std::norm(effective_spatial_wavefunction(zero, 0.0, 0.0, 0.0, {}, 1.0));
    // |N (sqrt(pi)/sigma)^2|^2 for the two axes combined
    double expect = std::pow(zero.norm * M_PI / (sigma * sigma), 2.0);
    CHECK(d0 == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("special points")
{
    auto p = AiryPacketParams::make(1.0, 50.0, 2.0, 2.0, 0.0, 0.0);
    auto s1 = special_point(p, 1, 1);
    auto s2 = special_point(p, 2, 2);
    auto s3 = special_point(p, 3, 3);
    CHECK(s1.b_x == doctest::Approx(4.8012).epsilon(1e-4));
    CHECK(s2.b_x == doctest::Approx(8.3009).epsilon(1e-4));
    CHECK(s3.b_x == doctest::Approx(11.1661).epsilon(1e-4));
    CHECK(s1.kind == SpecialPointKind::Type1);
    CHECK(s1.b_x < s2.b_x);
    CHECK(s2.b_x < s3.b_x);

    auto sx = special_point(p, 2, 0);
    CHECK(sx.kind == SpecialPointKind::Type2X);
    CHECK(sx.b_y == p.b_y);
    auto sy = special_point(p, 0, 1);
    CHECK(sy.kind == SpecialPointKind::Type2Y);

    CHECK_THROWS_AS(special_point(p, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(special_point(p, 101, 1), std::out_of_range);
}

TEST_CASE("regime validation")
{
    auto kin = BeamKinematics::make(10.0, 0.0);
    // sigma_perp = a flagged at p_i a = 10
    auto narrow = AiryPacketParams::make(1.0, 100.0, 2.0, 2.0, 0.0, 0.0);
    auto w1 = validate_regime(narrow, kin, 1.0);
    CHECK(w1.size() == 1);
    // comfortable regime: no warnings
    auto wide = AiryPacketParams::make(10.0, 50.0, 20.0, 20.0, 0.0, 0.0);
    CHECK(validate_regime(wide, kin, 1.0).empty());
    // sigma_z = a violates a << sigma_z
    auto thin = AiryPacketParams::make(10.0, 1.0, 20.0, 20.0, 0.0, 0.0);
    auto w3 = validate_regime(thin, kin, 1.0);
    CHECK(w3.size() >= 1);
}

TEST_CASE("kinetic energy")
{
    CHECK(kinetic_energy_ev(BeamKinematics::make(10.0, 0.0))
          == doctest::Approx(1360.57).epsilon(1e-4));
    CHECK(kinetic_energy_ev(BeamKinematics::make(1.0, 0.0))
          == doctest::Approx(13.6057).epsilon(1e-4));
}
