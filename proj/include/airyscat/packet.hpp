//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "airyscat/airy.hpp"

namespace airyscat {

/// Transverse Airy packet state. Internal units: lengths in units of the
/// potential radius a, momenta in 1/a, hbar = m_e = 1.
struct AiryPacketParams
{
    double sigma_perp = 1.0;
    double sigma_z = 50.0;
    double xi_x = 2.0;
    double xi_y = 2.0;
    double b_x = 0.0;
    double b_y = 0.0;
    double norm = 2.0;  // always 2 * sigma_perp; see make()

    /// Validating constructor; enforces norm = 2 sigma_perp.
    /// Throws std::invalid_argument on non-positive widths or negative xi.
    static AiryPacketParams make(double sigma_perp,
                                 double sigma_z,
                                 double xi_x,
                                 double xi_y,
                                 double b_x,
                                 double b_y);
};

struct BeamKinematics
{
    double p_i = 10.0;    // longitudinal momentum, units 1/a
    double kappa0 = 0.0;  // mean transverse momentum, units 1/a
    double theta_k = 0.0; // conical angle, kappa0 = p_i tan(theta_k)
    double p_f = 10.0;    // sqrt(p_i^2 + kappa0^2)

    /// Throws std::invalid_argument unless p_i > 0 and kappa0 >= 0.
    static BeamKinematics make(double p_i, double kappa0);

    double cos_theta_k() const { return p_i / p_f; }
};

enum class SpecialPointKind
{
    Type1,   // both axis conditions hold
    Type2X,  // only the x condition holds
    Type2Y,  // only the y condition holds
};

struct SpecialPoint
{
    double b_x = 0.0;
    double b_y = 0.0;
    SpecialPointKind kind = SpecialPointKind::Type1;
    int m = 0;  // zero index on x (0 = condition not imposed)
    int n = 0;  // zero index on y
};

struct MomentumTransfer
{
    double qx = 0.0;
    double qy = 0.0;
    double qz = 0.0;

    double q2() const { return qx * qx + qy * qy + qz * qz; }
};

/// Momentum-space transverse wave function
/// N exp(-(kx^2+ky^2) sigma^2) exp(i(xi_x^3 kx^3 + xi_y^3 ky^3)/3 - i k.b).
Complex momentum_wavefunction(const AiryPacketParams& params,
                              double k_x,
                              double k_y);

/// Effective transverse spatial wave function Psi(x, y, s): the product of
/// stabilized per-axis Airy factors times N. s = 0 gives the packet's real
/// transverse wave function at the point (x, y); s > 0 and Q enter through
/// the rho/zeta parameterization. a is the potential radius scale of s.
Complex effective_spatial_wavefunction(const AiryPacketParams& params,
                                       double x,
                                       double y,
                                       double s,
                                       const MomentumTransfer& q,
                                       double a);

/// Impact parameter placing the packet's density minimum of zero indices
/// (m, n) on the scatterer. m = 0 (or n = 0) leaves that axis at the value
/// already stored in params; at least one index must be nonzero.
SpecialPoint special_point(const AiryPacketParams& params, int m, int n);

/// Advisory kinematic-regime checks (ratio threshold 0.1 for "much less").
std::vector<std::string> validate_regime(const AiryPacketParams& params,
                                         const BeamKinematics& kin,
                                         double a);

/// Kinetic energy p_i^2/2 in eV, with p_i in atomic units.
double kinetic_energy_ev(const BeamKinematics& kin);

namespace detail {

/// One transverse axis of the stabilized k-integral:
/// value = mantissa * exp(exponent), where the mathematical value is
/// (2 pi/xi) exp((2/3) rho^6 - i rho^2 zeta) Ai(rho^4 - i zeta) with
/// rho^2 = (sigma^2 + a^2 s/4)/xi^2, zeta = q a^2 s/(2 xi) - i b/xi.
/// Axes with xi below the fallback threshold use the closed-form Gaussian
/// integral instead.
struct AxisFactor
{
    Complex exponent;
    Complex mantissa;
};

AxisFactor axis_factor(double xi,
                       double sigma_perp,
                       double b_axis,
                       double a,
                       double s,
                       double q_axis);

constexpr double kGaussianFallbackRatio = 1e-3;

}  // namespace detail

}  // namespace airyscat
