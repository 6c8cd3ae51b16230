//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#pragma once

#include <utility>

#include "airyscat/packet.hpp"
#include "airyscat/potentials.hpp"

namespace airyscat {

/// Detector-plane angle pair; cos(theta) = cos(theta_x) cos(theta_y).
struct FlatAngles
{
    double theta_x = 0.0;
    double theta_y = 0.0;
};

struct AmplitudeResult
{
    Complex value{0.0, 0.0};
    double abs2 = 0.0;
    double error = 0.0;  // absolute quadrature error estimate on |value|
};

/// Momentum transfer for scattering angle (theta, phi):
/// (p_f sin t cos p, p_f sin t sin p, p_f cos t - p_i).
MomentumTransfer momentum_transfer(const BeamKinematics& kin,
                                   double theta,
                                   double phi);

/// Flat angles from polar (theta, phi); theta must lie in the forward
/// hemisphere [0, pi/2). The azimuth is the symmetric convention
/// phi = atan2(sin theta_y, sin theta_x), phi = 0 at theta = 0.
FlatAngles flat_from_polar(double theta, double phi);

/// Inverse mapping; returns (theta, phi).
std::pair<double, double> polar_from_flat(const FlatAngles& fa);

/// Wave-packet amplitude F(Q) by the stabilized one dimensional integral
/// over the potential's proper-time-like parameter s. Relative tolerance
/// rel_tol on the quadrature (default 1e-8). Throws std::runtime_error if
/// the quadrature does not converge.
AmplitudeResult scattering_amplitude(const MomentumTransfer& q,
                                     const AiryPacketParams& packet,
                                     const PotentialSpec& pot,
                                     double rel_tol = 1e-8);

/// Brute-force 2D convolution of the Born amplitude with the momentum
/// wave function over the transverse plane. Test oracle: slow, works for
/// any xi including 0.
AmplitudeResult scattering_amplitude_oracle2d(const MomentumTransfer& q,
                                              const AiryPacketParams& packet,
                                              const PotentialSpec& pot,
                                              double rel_tol = 1e-8);

/// Analytic point-potential (a -> 0) limit of the amplitude:
/// f0 (1 + eta) Psi(b_x, b_y, s = 0).
Complex point_potential_limit(const AiryPacketParams& packet,
                              const PotentialSpec& pot);

}  // namespace airyscat
