//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#include "airyscat/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <vector>

#include <json.hpp>

#include "airyscat/parallel.hpp"

namespace airyscat {

namespace {

constexpr double kPi = 3.14159265358979323846;

class CsvFile
{
  public:
    CsvFile(const std::string& path, const std::string& header)
    {
        file_ = std::fopen(path.c_str(), "wb");
        if (!file_)
            throw std::runtime_error("cannot open output file: " + path);
        std::fprintf(file_, "%s\n", header.c_str());
    }
    ~CsvFile()
    {
        if (file_)
            std::fclose(file_);
    }
    CsvFile(const CsvFile&) = delete;
    CsvFile& operator=(const CsvFile&) = delete;

    void row(std::initializer_list<double> values)
    {
        bool first = true;
        for (double v : values)
        {
            std::fprintf(file_, first ? "%.17g" : ",%.17g", v);
            first = false;
        }
        std::fprintf(file_, "\n");
    }
    void raw(const std::string& line) { std::fprintf(file_, "%s\n", line.c_str()); }

  private:
    std::FILE* file_ = nullptr;
};

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct ManifestTimer
{
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    double elapsed_s() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now()
                                             - start)
            .count();
    }
};

void write_manifest(const ScenarioConfig& cfg,
                    const RunOptions& opt,
                    const std::string& subcommand,
                    const std::vector<std::string>& outputs,
                    const ManifestTimer& timer)
{
    auto warnings = validate_regime(cfg.packet_params(), cfg.beam_kinematics(),
                                    cfg.potential_spec().a);
    nlohmann::ordered_json m;
    m["config_hash"] = config_hash(cfg);
    m["tool_version"] = kToolVersion;
    m["subcommand"] = subcommand;
    m["tolerance"] = opt.tolerance;
    m["threads"] = opt.threads;
    m["seed"] = opt.seed;
    m["wall_time_s"] = timer.elapsed_s();
    m["warnings"] = warnings;
    m["outputs"] = outputs;

    std::string path = opt.out_dir + "/" + subcommand + ".manifest.json";
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f)
        throw std::runtime_error("cannot open manifest file: " + path);
    std::string text = m.dump(2) + "\n";
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
}

void ensure_out_dir(const RunOptions& opt)
{
    std::filesystem::create_directories(opt.out_dir);
}

void write_grid_csv(const std::string& path,
                    const char* value_column,
                    const PatternGrid& pg)
{
    CsvFile csv(path, std::string("theta_x,theta_y,") + value_column);
    for (int j = 0; j < pg.grid.ny; ++j)
        for (int i = 0; i < pg.grid.nx; ++i)
            csv.row({pg.grid.theta_x(i), pg.grid.theta_y(j), pg.at(i, j)});
}

}  // namespace

void run_pattern(const ScenarioConfig& cfg, const RunOptions& opt)
{
    ManifestTimer timer;
    ensure_out_dir(opt);
    auto pg = pattern_grid(cfg.grid, cfg.packet_params(), cfg.beam_kinematics(),
                           cfg.potential_spec(), std::nullopt, opt.threads,
                           opt.tolerance);
    write_grid_csv(opt.out_dir + "/pattern.csv", "density", pg);
    write_manifest(cfg, opt, "pattern", {"pattern.csv"}, timer);
}

void run_mesoscopic(const ScenarioConfig& cfg, const RunOptions& opt)
{
    if (!cfg.target)
        throw ConfigError("mesoscopic: config requires a 'target' section");
    ManifestTimer timer;
    ensure_out_dir(opt);
    auto pg = pattern_grid(cfg.grid, cfg.packet_params(), cfg.beam_kinematics(),
                           cfg.potential_spec(), cfg.target, opt.threads,
                           opt.tolerance);
    write_grid_csv(opt.out_dir + "/mesoscopic.csv", "density", pg);
    write_manifest(cfg, opt, "mesoscopic", {"mesoscopic.csv"}, timer);
}

void run_azimuth(const ScenarioConfig& cfg, const RunOptions& opt)
{
    ManifestTimer timer;
    ensure_out_dir(opt);
    auto packet = cfg.packet_params();
    auto kin = cfg.beam_kinematics();
    auto pot = cfg.potential_spec();
    double theta = cfg.analysis.theta_fixed;
    double phi_ref = cfg.analysis.phi_reference;

    constexpr int kSamples = 360;
    std::vector<double> densities(kSamples);
    double ref;
    if (cfg.target)
    {
        ref = mesoscopic_density(flat_from_polar(theta, phi_ref), packet, kin,
                                 pot, *cfg.target, opt.tolerance);
        parallel_for(kSamples, opt.threads, [&](std::size_t k) {
            double phi = 2.0 * kPi * double(k) / kSamples;
            densities[k] = mesoscopic_density(flat_from_polar(theta, phi), packet,
                                              kin, pot, *cfg.target, opt.tolerance);
        });
    }
    else
    {
        auto ref_amp = scattering_amplitude(momentum_transfer(kin, theta, phi_ref),
                                            packet, pot, opt.tolerance);
        if (std::abs(ref_amp.value) <= 10.0 * ref_amp.error)
            throw std::runtime_error(
                "azimuth: reference density is below quadrature noise");
        ref = ref_amp.abs2 / kin.cos_theta_k();
        parallel_for(kSamples, opt.threads, [&](std::size_t k) {
            double phi = 2.0 * kPi * double(k) / kSamples;
            densities[k] = probability_density(flat_from_polar(theta, phi), packet,
                                               kin, pot, opt.tolerance);
        });
    }

    CsvFile csv(opt.out_dir + "/azimuth.csv", "phi,ratio");
    for (int k = 0; k < kSamples; ++k)
        csv.row({2.0 * kPi * double(k) / kSamples, densities[k] / ref});
    write_manifest(cfg, opt, "azimuth", {"azimuth.csv"}, timer);
}

void run_special_points(const ScenarioConfig& cfg, const RunOptions& opt)
{
    ManifestTimer timer;
    ensure_out_dir(opt);
    auto packet = cfg.packet_params();

    CsvFile csv(opt.out_dir + "/special_points.csv", "m,n,b_x,b_y,kind");
    for (int n = 1; n <= 3; ++n)
    {
        auto sp = special_point(packet, n, n);
        csv.raw(std::to_string(n) + "," + std::to_string(n) + "," + fmt(sp.b_x)
                + "," + fmt(sp.b_y) + ",type1");
    }
    write_manifest(cfg, opt, "special-points", {"special_points.csv"}, timer);
}

void run_macroscopic(const ScenarioConfig& cfg, const RunOptions& opt)
{
    ManifestTimer timer;
    ensure_out_dir(opt);
    auto packet = cfg.packet_params();
    auto kin = cfg.beam_kinematics();
    auto pot = cfg.potential_spec();

    const AngularGrid& g = cfg.grid;
    std::vector<double> values(std::size_t(g.nx) * g.ny);
    parallel_for(values.size(), opt.threads, [&](std::size_t idx) {
        int i = int(idx % g.nx);
        int j = int(idx / g.nx);
        auto [theta, phi] = polar_from_flat({g.theta_x(i), g.theta_y(j)});
        values[idx] = macroscopic_cross_section(theta, phi, packet, kin, pot);
    });

    CsvFile csv(opt.out_dir + "/macroscopic.csv", "theta_x,theta_y,cross_section");
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            csv.row({g.theta_x(i), g.theta_y(j), values[std::size_t(j) * g.nx + i]});
    write_manifest(cfg, opt, "macroscopic", {"macroscopic.csv"}, timer);
}

void run_critical_size(const ScenarioConfig& cfg, const RunOptions& opt)
{
    ManifestTimer timer;
    ensure_out_dir(opt);
    auto packet = cfg.packet_params();
    double b0x = cfg.target ? cfg.target->b0_x : packet.b_x;
    double b0y = cfg.target ? cfg.target->b0_y : packet.b_y;

    CsvFile csv(opt.out_dir + "/critical_size.csv",
                "axis,b0,xi,sigma_perp,sigma_c,clamped,inequality_holds");
    auto emit = [&](const char* axis, double b0, double xi) {
        auto cs = critical_size(b0, xi, packet.sigma_perp);
        bool ineq = size_inequality_check(b0, xi, packet.sigma_perp);
        csv.raw(std::string(axis) + "," + fmt(b0) + "," + fmt(xi) + ","
                + fmt(packet.sigma_perp) + "," + fmt(cs.sigma_c) + ","
                + (cs.clamped ? "1" : "0") + "," + (ineq ? "1" : "0"));
    };
    emit("x", b0x, packet.xi_x);
    emit("y", b0y, packet.xi_y);
    write_manifest(cfg, opt, "critical-size", {"critical_size.csv"}, timer);
}

void run_verify(const ScenarioConfig& cfg, const RunOptions& opt)
{
    ManifestTimer timer;
    ensure_out_dir(opt);
    constexpr int kDraws = 100;
    const double limit = 1e-6;

    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    CsvFile csv(opt.out_dir + "/verify.csv",
                "draw,potential,p_i_a,sigma_perp,xi_x,xi_y,b_x,b_y,theta,phi,"
                "abs_f,rel_diff");

    int failures = 0;
    double worst = 0.0;
    for (int d = 0; d < kDraws; ++d)
    {
        double sp = 0.5 + 9.5 * u01(rng);
        double xi_x = sp * (0.5 + 2.5 * u01(rng));
        double xi_y = sp * (0.5 + 2.5 * u01(rng));
        double br = 12.0 * sp * u01(rng);
        double ba = 2.0 * kPi * u01(rng);
        double b_x = br * std::cos(ba);
        double b_y = br * std::sin(ba);
        double theta = 0.3 * u01(rng);
        double phi = 2.0 * kPi * u01(rng);
        const double p_choices[3] = {5.0, 10.0, 20.0};
        double p_i = p_choices[int(3.0 * u01(rng)) % 3];
        bool hydrogen = u01(rng) < 0.7;
        PotentialSpec pot = hydrogen
                                ? hydrogen_spec(1.0)
                                : yukawa_spec(0.5 + 1.5 * u01(rng),
                                              0.5 + 1.5 * u01(rng));

        auto packet = AiryPacketParams::make(sp, 50.0, xi_x, xi_y, b_x, b_y);
        auto kin = BeamKinematics::make(p_i, 0.0);
        auto q = momentum_transfer(kin, theta, phi);

        auto r1 = scattering_amplitude(q, packet, pot, opt.tolerance);
        auto r2 = scattering_amplitude_oracle2d(q, packet, pot, opt.tolerance);
        // When cancellation pushes |F| many orders below the integrand
        // scale |f0| N pi / sigma^2, a pure relative comparison would sit
        // under the oracle's roundoff; floor the denominator there.
        double cancel_floor = 1e-9 * std::abs(pot.f0) * packet.norm * kPi
                              / (packet.sigma_perp * packet.sigma_perp);
        double scale = std::max({std::abs(r1.value), std::abs(r2.value),
                                 cancel_floor});
        double rel = scale > 0.0 ? std::abs(r1.value - r2.value) / scale : 0.0;
        worst = std::max(worst, rel);
        if (rel > limit)
            ++failures;

        csv.row({double(d), hydrogen ? 0.0 : 1.0, p_i, sp, xi_x, xi_y, b_x, b_y,
                 theta, phi, std::abs(r1.value), rel});
    }

    write_manifest(cfg, opt, "verify", {"verify.csv"}, timer);
    std::printf("verify: %d/%d draws within %.1e (worst relative difference %.3e)\n",
                kDraws - failures, kDraws, limit, worst);
    if (failures > 0)
        throw VerificationFailure(std::to_string(failures)
                                  + " draws exceeded the 1e-6 relative limit");
}

}  // namespace airyscat
