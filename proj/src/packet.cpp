//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#include "airyscat/packet.hpp"

#include <cmath>
#include <stdexcept>

namespace airyscat {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kHartreeEv = 27.2114;
}  // namespace

AiryPacketParams AiryPacketParams::make(double sigma_perp,
                                        double sigma_z,
                                        double xi_x,
                                        double xi_y,
                                        double b_x,
                                        double b_y)
{
    if (!(sigma_perp > 0.0))
        throw std::invalid_argument("packet: sigma_perp must be positive");
    if (!(sigma_z > 0.0))
        throw std::invalid_argument("packet: sigma_z must be positive");
    if (xi_x < 0.0 || xi_y < 0.0)
        throw std::invalid_argument("packet: xi must be non-negative");
    AiryPacketParams p;
    p.sigma_perp = sigma_perp;
    p.sigma_z = sigma_z;
    p.xi_x = xi_x;
    p.xi_y = xi_y;
    p.b_x = b_x;
    p.b_y = b_y;
    p.norm = 2.0 * sigma_perp;
    return p;
}

BeamKinematics BeamKinematics::make(double p_i, double kappa0)
{
    if (!(p_i > 0.0))
        throw std::invalid_argument("kinematics: p_i must be positive");
    if (kappa0 < 0.0)
        throw std::invalid_argument("kinematics: kappa0 must be non-negative");
    BeamKinematics k;
    k.p_i = p_i;
    k.kappa0 = kappa0;
    k.theta_k = std::atan2(kappa0, p_i);
    k.p_f = std::hypot(p_i, kappa0);
    return k;
}

Complex momentum_wavefunction(const AiryPacketParams& params,
                              double k_x,
                              double k_y)
{
    double g = -(k_x * k_x + k_y * k_y) * params.sigma_perp * params.sigma_perp;
    double cube = (std::pow(params.xi_x * k_x, 3.0)
                   + std::pow(params.xi_y * k_y, 3.0))
                  / 3.0;
    double phase = cube - k_x * params.b_x - k_y * params.b_y;
    return params.norm * std::exp(Complex{g, phase});
}

namespace detail {

AxisFactor axis_factor(double xi,
                       double sigma_perp,
                       double b_axis,
                       double a,
                       double s,
                       double q_axis)
{
    double beta = sigma_perp * sigma_perp + 0.25 * a * a * s;
    Complex gamma{0.5 * q_axis * a * a * s, -b_axis};

    if (xi < kGaussianFallbackRatio * sigma_perp)
    {
        // Gaussian axis: integral of exp(-beta k^2 + gamma k)
        return {gamma * gamma / (4.0 * beta),
                Complex{std::sqrt(kPi / beta), 0.0}};
    }

    double rho2 = beta / (xi * xi);
    Complex zeta = gamma / xi;
    // w = rho^4 - i zeta
    Complex w{rho2 * rho2 + zeta.imag(), -zeta.real()};
    Complex base_exp = Complex{(2.0 / 3.0) * rho2 * rho2 * rho2, 0.0}
                       + rho2 * Complex{zeta.imag(), -zeta.real()};

    double pref = 2.0 * kPi / xi;
    if (w.real() >= 0.0 && std::abs(w) > 20.0)
    {
        Complex ws = std::sqrt(w);
        Complex t = (2.0 / 3.0) * ws * ws * ws;
        return {base_exp - t, pref * airy_ai_scaled(w)};
    }
    return {base_exp, pref * airy_ai(w)};
}

}  // namespace detail

Complex effective_spatial_wavefunction(const AiryPacketParams& params,
                                       double x,
                                       double y,
                                       double s,
                                       const MomentumTransfer& q,
                                       double a)
{
    if (s < 0.0)
        throw std::invalid_argument("effective_spatial_wavefunction: s < 0");
    auto ax = detail::axis_factor(params.xi_x, params.sigma_perp, x, a, s, q.qx);
    auto ay = detail::axis_factor(params.xi_y, params.sigma_perp, y, a, s, q.qy);
    return params.norm * ax.mantissa * ay.mantissa
           * std::exp(ax.exponent + ay.exponent);
}

SpecialPoint special_point(const AiryPacketParams& params, int m, int n)
{
    if (m == 0 && n == 0)
        throw std::invalid_argument("special_point: at least one zero index required");

    SpecialPoint sp;
    sp.m = m;
    sp.n = n;
    double s4 = std::pow(params.sigma_perp, 4.0);

    if (m >= 1)
        sp.b_x = params.xi_x * (s4 / std::pow(params.xi_x, 4.0) - airy_zero(m));
    else
        sp.b_x = params.b_x;
    if (n >= 1)
        sp.b_y = params.xi_y * (s4 / std::pow(params.xi_y, 4.0) - airy_zero(n));
    else
        sp.b_y = params.b_y;

    if (m >= 1 && n >= 1)
        sp.kind = SpecialPointKind::Type1;
    else if (m >= 1)
        sp.kind = SpecialPointKind::Type2X;
    else
        sp.kind = SpecialPointKind::Type2Y;

    // verify the imposed conditions against the Airy evaluator
    if (m >= 1)
    {
        double arg = -sp.b_x / params.xi_x + s4 / std::pow(params.xi_x, 4.0);
        if (std::abs(airy_ai({arg, 0.0})) > 1e-8)
            throw std::runtime_error("special_point: x condition not satisfied");
    }
    if (n >= 1)
    {
        double arg = -sp.b_y / params.xi_y + s4 / std::pow(params.xi_y, 4.0);
        if (std::abs(airy_ai({arg, 0.0})) > 1e-8)
            throw std::runtime_error("special_point: y condition not satisfied");
    }
    return sp;
}

std::vector<std::string> validate_regime(const AiryPacketParams& params,
                                         const BeamKinematics& kin,
                                         double a)
{
    constexpr double kRatio = 0.1;
    std::vector<std::string> warnings;

    auto check = [&](double small, double large, const char* msg) {
        if (small >= kRatio * large)
            warnings.push_back(std::string("regime: ") + msg + " (ratio "
                               + std::to_string(small / large) + " >= 0.1)");
    };

    check(a, params.sigma_z, "potential radius not much less than sigma_z");
    if (kin.kappa0 > 0.0)
        check(params.sigma_z, params.sigma_perp * kin.p_i / kin.kappa0,
              "sigma_z not much less than sigma_perp p_i/kappa0");
    check(1.0 / params.sigma_perp, kin.p_i,
          "transverse momentum spread not much less than p_i");
    check(1.0 / params.sigma_z, kin.p_i,
          "longitudinal momentum spread not much less than p_i");
    return warnings;
}

double kinetic_energy_ev(const BeamKinematics& kin)
{
    return 0.5 * kin.p_i * kin.p_i * kHartreeEv;
}

}  // namespace airyscat
