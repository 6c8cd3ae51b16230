//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#include "airyscat/observables.hpp"

#include <algorithm>
#include <cmath>

#include "airyscat/parallel.hpp"
#include "airyscat/quadrature.hpp"

namespace airyscat {

namespace {

constexpr double kPi = 3.14159265358979323846;

double density_at(const MomentumTransfer& q,
                  const AiryPacketParams& packet,
                  const BeamKinematics& kin,
                  const PotentialSpec& pot,
                  double rel_tol)
{
    return scattering_amplitude(q, packet, pot, rel_tol).abs2 / kin.cos_theta_k();
}

}  // namespace

double PatternGrid::max_value() const
{
    double best = 0.0;
    for (double v : values)
        best = std::max(best, v);
    return best;
}

double probability_density(const FlatAngles& fa,
                           const AiryPacketParams& packet,
                           const BeamKinematics& kin,
                           const PotentialSpec& pot,
                           double rel_tol)
{
    auto [theta, phi] = polar_from_flat(fa);
    return density_at(momentum_transfer(kin, theta, phi), packet, kin, pot, rel_tol);
}

PatternGrid pattern_grid(const AngularGrid& grid,
                         const AiryPacketParams& packet,
                         const BeamKinematics& kin,
                         const PotentialSpec& pot,
                         const std::optional<TargetDistribution>& target,
                         unsigned threads,
                         double rel_tol)
{
    if (grid.nx < 2 || grid.ny < 2)
        throw std::invalid_argument("pattern_grid: grid counts must be >= 2");

    PatternGrid out;
    out.grid = grid;
    out.values.resize(std::size_t(grid.nx) * grid.ny);

    parallel_for(out.values.size(), threads, [&](std::size_t idx) {
        int i = int(idx % grid.nx);
        int j = int(idx / grid.nx);
        FlatAngles fa{grid.theta_x(i), grid.theta_y(j)};
        try
        {
            out.values[idx]
                = target ? mesoscopic_density(fa, packet, kin, pot, *target, rel_tol)
                         : probability_density(fa, packet, kin, pot, rel_tol);
        }
        catch (const std::exception& e)
        {
            throw std::runtime_error("pattern_grid: node (" + std::to_string(i)
                                     + ", " + std::to_string(j) + "): " + e.what());
        }
    });
    return out;
}

namespace {

// Bilinear interpolation on the pattern grid
double interp(const PatternGrid& pg, double tx, double ty)
{
    const AngularGrid& g = pg.grid;
    double fx = (tx - g.theta_x_min) / (g.theta_x_max - g.theta_x_min) * (g.nx - 1);
    double fy = (ty - g.theta_y_min) / (g.theta_y_max - g.theta_y_min) * (g.ny - 1);
    int i = std::clamp(int(std::floor(fx)), 0, g.nx - 2);
    int j = std::clamp(int(std::floor(fy)), 0, g.ny - 2);
    double ax = std::clamp(fx - i, 0.0, 1.0);
    double ay = std::clamp(fy - j, 0.0, 1.0);
    return pg.at(i, j) * (1 - ax) * (1 - ay) + pg.at(i + 1, j) * ax * (1 - ay)
           + pg.at(i, j + 1) * (1 - ax) * ay + pg.at(i + 1, j + 1) * ax * ay;
}

struct RingPeaks
{
    std::vector<int> indices;
    double ring_max = 0.0;
    double variation = 0.0;
};

constexpr int kAzimuthSamples = 720;
constexpr double kSeparationDeg = 10.0;

RingPeaks find_ring_peaks(const std::vector<double>& ring, double frac)
{
    RingPeaks out;
    double lo = ring[0];
    for (double v : ring)
    {
        out.ring_max = std::max(out.ring_max, v);
        lo = std::min(lo, v);
    }
    out.variation = out.ring_max > 0.0 ? (out.ring_max - lo) / out.ring_max : 0.0;

    int n = int(ring.size());
    std::vector<int> raw;
    for (int i = 0; i < n; ++i)
    {
        double prev = ring[(i + n - 1) % n];
        double next = ring[(i + 1) % n];
        if (ring[i] > prev && ring[i] >= next && ring[i] > frac * out.ring_max)
            raw.push_back(i);
    }
    // enforce minimum angular separation, keeping the strongest first
    std::sort(raw.begin(), raw.end(),
              [&](int a, int b) { return ring[a] > ring[b]; });
    int min_sep = int(kSeparationDeg / 360.0 * n);
    for (int cand : raw)
    {
        bool ok = true;
        for (int kept : out.indices)
        {
            int d = std::abs(cand - kept);
            d = std::min(d, n - d);
            if (d < min_sep)
            {
                ok = false;
                break;
            }
        }
        if (ok)
            out.indices.push_back(cand);
    }
    std::sort(out.indices.begin(), out.indices.end());
    return out;
}

PatternKind kind_from_peaks(const RingPeaks& peaks,
                            const std::vector<double>& azimuths)
{
    if (peaks.variation < 0.25)
        return PatternKind::Circular;
    switch (peaks.indices.size())
    {
        case 2: {
            double along_x = 0.0;
            double along_y = 0.0;
            for (int idx : peaks.indices)
            {
                along_x += std::abs(std::cos(azimuths[idx]));
                along_y += std::abs(std::sin(azimuths[idx]));
            }
            return along_x > along_y ? PatternKind::TwoPetalX
                                     : PatternKind::TwoPetalY;
        }
        case 4:
            return PatternKind::FourPetal;
        default:
            return PatternKind::Transitional;
    }
}

}  // namespace

PatternClass classify_pattern(const PatternGrid& grid, double quadrature_floor)
{
    const AngularGrid& g = grid.grid;
    double r_max = 0.98
                   * std::min({-g.theta_x_min, g.theta_x_max,
                               -g.theta_y_min, g.theta_y_max});
    if (!(r_max > 0.0))
        throw std::invalid_argument("classify_pattern: grid does not surround the origin");

    std::vector<double> azimuths(kAzimuthSamples);
    for (int i = 0; i < kAzimuthSamples; ++i)
        azimuths[i] = 2.0 * kPi * i / kAzimuthSamples;

    // radius of maximal azimuthally averaged density
    constexpr int kRadii = 240;
    double best_mean = -1.0;
    double ring_theta = 0.0;
    for (int r = 1; r <= kRadii; ++r)
    {
        double radius = r_max * r / kRadii;
        double mean = 0.0;
        for (double az : azimuths)
            mean += interp(grid, radius * std::cos(az), radius * std::sin(az));
        mean /= kAzimuthSamples;
        if (mean > best_mean)
        {
            best_mean = mean;
            ring_theta = radius;
        }
    }

    std::vector<double> ring(kAzimuthSamples);
    for (int i = 0; i < kAzimuthSamples; ++i)
        ring[i] = interp(grid, ring_theta * std::cos(azimuths[i]),
                         ring_theta * std::sin(azimuths[i]));

    auto peaks = find_ring_peaks(ring, 0.20);
    if (peaks.ring_max <= quadrature_floor)
        throw std::runtime_error("classify_pattern: pattern below the quadrature noise floor");

    PatternKind kind = kind_from_peaks(peaks, azimuths);
    // stability check under threshold perturbation
    PatternKind kind_lo = kind_from_peaks(find_ring_peaks(ring, 0.15), azimuths);
    PatternKind kind_hi = kind_from_peaks(find_ring_peaks(ring, 0.25), azimuths);
    if (kind_lo != kind || kind_hi != kind)
        throw AmbiguousClassification(
            "classify_pattern: verdict changes under peak-threshold perturbation");

    PatternClass out;
    out.kind = kind;
    out.ring_theta = ring_theta;
    out.ring_variation = peaks.variation;
    for (int idx : peaks.indices)
    {
        out.peak_azimuths.push_back(azimuths[idx]);
        out.peak_values.push_back(ring[idx]);
    }
    return out;
}

double azimuthal_ratio(double theta,
                       double phi,
                       const AiryPacketParams& packet,
                       const BeamKinematics& kin,
                       const PotentialSpec& pot,
                       double rel_tol)
{
    auto ref = scattering_amplitude(momentum_transfer(kin, theta, kPi / 4.0),
                                    packet, pot, rel_tol);
    if (std::abs(ref.value) <= 10.0 * ref.error)
        throw std::runtime_error(
            "azimuthal_ratio: reference density at phi = pi/4 is below quadrature noise");
    auto num = scattering_amplitude(momentum_transfer(kin, theta, phi), packet,
                                    pot, rel_tol);
    return num.abs2 / ref.abs2;
}

double mesoscopic_density(const FlatAngles& fa,
                          const AiryPacketParams& packet,
                          const BeamKinematics& kin,
                          const PotentialSpec& pot,
                          const TargetDistribution& target,
                          double rel_tol)
{
    if (target.sigma_b < 0.0)
        throw std::invalid_argument("mesoscopic_density: sigma_b must be >= 0");

    auto [theta, phi] = polar_from_flat(fa);
    auto q = momentum_transfer(kin, theta, phi);

    if (target.sigma_b == 0.0)
    {
        AiryPacketParams shifted = packet;
        shifted.b_x = target.b0_x;
        shifted.b_y = target.b0_y;
        return density_at(q, shifted, kin, pot, rel_tol);
    }

    auto average = [&](int order) {
        const auto& rule = quad::gauss_hermite(order);
        double scale = std::sqrt(2.0) * target.sigma_b;
        double sum = 0.0;
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        for (int i = 0; i < order; ++i)
        {
            AiryPacketParams shifted = packet;
            shifted.b_x = target.b0_x + scale * rule.nodes[i];
            for (int j = 0; j < order; ++j)
            {
                shifted.b_y = target.b0_y + scale * rule.nodes[j];
                double d = density_at(q, shifted, kin, pot, rel_tol);
                sum += rule.weights[i] * rule.weights[j] * d;
                lo = std::min(lo, d);
                hi = std::max(hi, d);
            }
        }
        return std::pair{sum / kPi, lo > 0.0 ? hi / lo : 1e30};
    };

    auto [value, spread] = average(40);
    if (spread > 1e3)
        value = average(80).first;
    return value;
}

double macroscopic_cross_section(double theta,
                                 double phi,
                                 const AiryPacketParams& packet,
                                 const BeamKinematics& kin,
                                 const PotentialSpec& pot)
{
    auto q = momentum_transfer(kin, theta, phi);
    const auto& rule = quad::gauss_hermite(60);
    double inv_scale = 1.0 / (std::sqrt(2.0) * packet.sigma_perp);
    double sum = 0.0;
    for (int i = 0; i < 60; ++i)
    {
        double kx = rule.nodes[i] * inv_scale;
        double dx = q.qx - kx;
        for (int j = 0; j < 60; ++j)
        {
            double dy = q.qy - rule.nodes[j] * inv_scale;
            double q2 = dx * dx + dy * dy + q.qz * q.qz;
            double f = born_amplitude(pot, q2);
            sum += rule.weights[i] * rule.weights[j] * f * f;
        }
    }
    return sum / (kPi * kin.cos_theta_k());
}

CriticalSize critical_size(double b0, double xi, double sigma_perp)
{
    if (!(xi > 0.0))
        throw std::invalid_argument("critical_size: xi must be positive");
    double raw = b0 - std::pow(sigma_perp, 4.0) / std::pow(xi, 3.0) - 1.018 * xi;
    if (raw < 0.0)
        return {0.0, true};
    return {raw, false};
}

bool size_inequality_check(double b, double xi, double sigma_perp)
{
    if (!(xi > 0.0))
        throw std::invalid_argument("size_inequality_check: xi must be positive");
    return -b / xi + std::pow(sigma_perp / xi, 4.0) < -1.018;
}

}  // namespace airyscat
