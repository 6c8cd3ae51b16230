//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "airyscat/amplitude.hpp"

namespace airyscat {

struct AngularGrid
{
    double theta_x_min = -0.3;
    double theta_x_max = 0.3;
    double theta_y_min = -0.3;
    double theta_y_max = 0.3;
    int nx = 201;
    int ny = 201;

    double theta_x(int i) const
    {
        return theta_x_min + (theta_x_max - theta_x_min) * i / (nx - 1);
    }
    double theta_y(int j) const
    {
        return theta_y_min + (theta_y_max - theta_y_min) * j / (ny - 1);
    }
};

/// Gaussian scatterer density n(b), normalized to 1.
struct TargetDistribution
{
    double b0_x = 0.0;
    double b0_y = 0.0;
    double sigma_b = 0.0;
};

enum class PatternKind
{
    Circular,
    TwoPetalX,
    TwoPetalY,
    FourPetal,
    Transitional,
};

struct PatternClass
{
    PatternKind kind = PatternKind::Circular;
    std::vector<double> peak_azimuths;
    std::vector<double> peak_values;
    double ring_theta = 0.0;      // flat-angle radius of the peak ring
    double ring_variation = 0.0;  // (max-min)/max of density on the ring
};

/// Thrown when the peak count flips under threshold perturbation.
class AmbiguousClassification : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct PatternGrid
{
    AngularGrid grid;
    std::vector<double> values;  // row-major, index j * nx + i

    double at(int i, int j) const { return values[std::size_t(j) * grid.nx + i]; }
    double max_value() const;
};

/// Single-atom angular probability density |F|^2 / cos(theta_k), N_e = 1.
double probability_density(const FlatAngles& fa,
                           const AiryPacketParams& packet,
                           const BeamKinematics& kin,
                           const PotentialSpec& pot,
                           double rel_tol = 1e-8);

/// Density on every grid node; mesoscopic averaging applied when a target
/// is given. Deterministic output ordering regardless of thread count.
PatternGrid pattern_grid(const AngularGrid& grid,
                         const AiryPacketParams& packet,
                         const BeamKinematics& kin,
                         const PotentialSpec& pot,
                         const std::optional<TargetDistribution>& target = {},
                         unsigned threads = 0,
                         double rel_tol = 1e-8);

/// Classify the petal structure of a computed grid. quadrature_floor is
/// the density level below which values are considered numerical noise.
PatternClass classify_pattern(const PatternGrid& grid, double quadrature_floor = 0.0);

/// dnu(theta, phi) / dnu(theta, pi/4). Throws std::runtime_error when the
/// reference density is below quadrature noise.
double azimuthal_ratio(double theta,
                       double phi,
                       const AiryPacketParams& packet,
                       const BeamKinematics& kin,
                       const PotentialSpec& pot,
                       double rel_tol = 1e-8);

/// Gauss-Hermite average of the single-atom density over the Gaussian
/// target; sigma_b = 0 reduces to the density at the target center.
double mesoscopic_density(const FlatAngles& fa,
                          const AiryPacketParams& packet,
                          const BeamKinematics& kin,
                          const PotentialSpec& pot,
                          const TargetDistribution& target,
                          double rel_tol = 1e-8);

/// Incoherently averaged (macroscopic-target) cross section
/// per solid angle: integral of |f(Q - k)|^2 |Phi(k)|^2 d^2k/(2 pi),
/// divided by cos(theta_k). Phase-blind: independent of xi and b.
double macroscopic_cross_section(double theta,
                                 double phi,
                                 const AiryPacketParams& packet,
                                 const BeamKinematics& kin,
                                 const PotentialSpec& pot);

struct CriticalSize
{
    double sigma_c = 0.0;
    bool clamped = false;  // true when the raw estimate was negative
};

/// Semi-empirical critical target width sigma_c = b0 - sigma^4/xi^3 - 1.018 xi,
/// clamped at zero.
CriticalSize critical_size(double b0, double xi, double sigma_perp);

/// Whether -b/xi + sigma^4/xi^4 < -1.018 (packet structure resolvable).
bool size_inequality_check(double b, double xi, double sigma_perp);

}  // namespace airyscat
