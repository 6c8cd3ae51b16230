//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#include "airyscat/amplitude.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "airyscat/quadrature.hpp"

namespace airyscat {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = 0.5 * kPi;
}  // namespace

MomentumTransfer momentum_transfer(const BeamKinematics& kin,
                                   double theta,
                                   double phi)
{
    if (theta < 0.0 || theta > kPi)
        throw std::invalid_argument("momentum_transfer: theta outside [0, pi]");
    double st = std::sin(theta);
    return {kin.p_f * st * std::cos(phi),
            kin.p_f * st * std::sin(phi),
            kin.p_f * std::cos(theta) - kin.p_i};
}

FlatAngles flat_from_polar(double theta, double phi)
{
    if (theta < 0.0 || theta >= kHalfPi)
        throw std::domain_error("flat_from_polar: theta outside the forward hemisphere");
    // Solve sin(theta_x) = t cos(phi), sin(theta_y) = t sin(phi) with t
    // fixed by cos(theta_x) cos(theta_y) = cos(theta):
    // t^2 = 2 sin^2(theta) / (1 + sqrt(1 - sin^2(2 phi) sin^2(theta)))
    double st = std::sin(theta);
    double s2p = std::sin(2.0 * phi);
    double disc = 1.0 - s2p * s2p * st * st;
    double t = st * std::sqrt(2.0 / (1.0 + std::sqrt(std::max(disc, 0.0))));
    return {std::asin(std::clamp(t * std::cos(phi), -1.0, 1.0)),
            std::asin(std::clamp(t * std::sin(phi), -1.0, 1.0))};
}

std::pair<double, double> polar_from_flat(const FlatAngles& fa)
{
    if (std::abs(fa.theta_x) >= kHalfPi || std::abs(fa.theta_y) >= kHalfPi)
        throw std::domain_error("polar_from_flat: flat angles outside (-pi/2, pi/2)");
    double ct = std::cos(fa.theta_x) * std::cos(fa.theta_y);
    double theta = std::acos(std::clamp(ct, -1.0, 1.0));
    double sx = std::sin(fa.theta_x);
    double sy = std::sin(fa.theta_y);
    double phi = (sx == 0.0 && sy == 0.0) ? 0.0 : std::atan2(sy, sx);
    return {theta, phi};
}

AmplitudeResult scattering_amplitude(const MomentumTransfer& q,
                                     const AiryPacketParams& packet,
                                     const PotentialSpec& pot,
                                     double rel_tol)
{
    double z0 = 1.0 + 0.25 * q.q2() * pot.a * pot.a;
    double s_max = 45.0 / z0;

    auto integrand = [&](double s) -> Complex {
        auto ax = detail::axis_factor(packet.xi_x, packet.sigma_perp,
                                      packet.b_x, pot.a, s, q.qx);
        auto ay = detail::axis_factor(packet.xi_y, packet.sigma_perp,
                                      packet.b_y, pot.a, s, q.qy);
        Complex expo = ax.exponent + ay.exponent - s * z0;
        return (1.0 + pot.eta * s) * ax.mantissa * ay.mantissa * std::exp(expo);
    };

    auto res = quad::adaptive_gk15(integrand, 0.0, s_max, 0.0, rel_tol, 2000, 8);
    if (!res.converged)
        throw std::runtime_error(
            "scattering_amplitude: quadrature failed (error estimate "
            + std::to_string(res.error) + ")");

    double pref = pot.f0 * packet.norm;
    AmplitudeResult out;
    out.value = pref * res.value;
    out.abs2 = std::norm(out.value);
    out.error = std::abs(pref) * res.error;
    return out;
}

AmplitudeResult scattering_amplitude_oracle2d(const MomentumTransfer& q,
                                              const AiryPacketParams& packet,
                                              const PotentialSpec& pot,
                                              double rel_tol)
{
    double box = 8.0 / packet.sigma_perp;

    // Pre-split so no initial panel holds more than ~half an oscillation
    // of the cubic phase over the Gaussian-significant region.
    double xi_max = std::max(packet.xi_x, packet.xi_y);
    double k_sig = 4.0 / packet.sigma_perp;
    double phase = std::pow(xi_max * k_sig, 3.0) / 3.0;
    int n0 = std::clamp(int(phase / kPi) + 4, 8, 400);

    // scale of the inner 1D integral, for an absolute tolerance floor
    double scale_inner = std::abs(pot.f0) * packet.norm * std::sqrt(kPi)
                         / packet.sigma_perp;

    auto inner = [&](double kx) -> Complex {
        auto f = [&](double ky) -> Complex {
            double dx = q.qx - kx;
            double dy = q.qy - ky;
            double q2 = dx * dx + dy * dy + q.qz * q.qz;
            return born_amplitude(pot, q2) * momentum_wavefunction(packet, kx, ky);
        };
        // The absolute floor must sit above the roundoff plateau of
        // heavily cancelled oscillatory panels (~1e-14 * scale).
        auto r = quad::adaptive_gk15(f, -box, box, 1e-4 * rel_tol * scale_inner,
                                     0.1 * rel_tol, 4000, n0);
        if (!r.converged)
            throw std::runtime_error("scattering_amplitude_oracle2d: inner quadrature failed");
        return r.value;
    };

    auto res = quad::adaptive_gk15(inner, -box, box,
                                   1e-4 * rel_tol * scale_inner / packet.sigma_perp,
                                   rel_tol, 4000, n0);
    if (!res.converged)
        throw std::runtime_error("scattering_amplitude_oracle2d: outer quadrature failed");

    AmplitudeResult out;
    out.value = res.value;
    out.abs2 = std::norm(res.value);
    out.error = res.error;
    return out;
}

Complex point_potential_limit(const AiryPacketParams& packet,
                              const PotentialSpec& pot)
{
    Complex psi = effective_spatial_wavefunction(packet, packet.b_x, packet.b_y,
                                                 0.0, {}, pot.a);
    return pot.f0 * (1.0 + pot.eta) * psi;
}

}  // namespace airyscat
