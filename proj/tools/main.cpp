//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "airyscat/runner.hpp"

namespace {

using airyscat::ConfigError;
using airyscat::RunOptions;
using airyscat::ScenarioConfig;

ScenarioConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return airyscat::parse_config(text.str());
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Airy wave-packet scattering calculator"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand name

    std::string config_path;
    RunOptions opt;

    app.add_option("--config", config_path, "scenario config file (JSON)")
        ->required();
    app.add_option("--out", opt.out_dir, "output directory (default .)");
    app.add_option("--threads", opt.threads, "worker threads, 0 = auto");
    app.add_option("--tolerance", opt.tolerance,
                   "quadrature relative tolerance (default 1e-8)");
    app.add_option("--seed", opt.seed, "random seed for the verify suite");

    using Runner = std::function<void(const ScenarioConfig&, const RunOptions&)>;
    struct Sub
    {
        const char* name;
        const char* help;
        Runner run;
    };
    const Sub subs[] = {
        {"pattern", "angular probability density grid", airyscat::run_pattern},
        {"azimuth", "azimuthal ratio at fixed polar angle", airyscat::run_azimuth},
        {"special-points", "impact parameters of density minima",
         airyscat::run_special_points},
        {"mesoscopic", "density averaged over a Gaussian target",
         airyscat::run_mesoscopic},
        {"macroscopic", "incoherently averaged cross section",
         airyscat::run_macroscopic},
        {"critical-size", "critical target width estimate",
         airyscat::run_critical_size},
        {"verify", "cross-check the 1D amplitude against the 2D oracle",
         airyscat::run_verify},
    };

    Runner selected;
    for (const auto& sub : subs)
    {
        auto* cmd = app.add_subcommand(sub.name, sub.help);
        cmd->callback([&selected, &sub] { selected = sub.run; });
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;  // command-line misuse is a validation error
    }

    try
    {
        ScenarioConfig cfg = load_config(config_path);
        selected(cfg, opt);
    }
    catch (const ConfigError& e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    catch (const airyscat::VerificationFailure& e)
    {
        std::fprintf(stderr, "verification failed: %s\n", e.what());
        return 3;
    }
    catch (const std::exception& e)
    {
        std::fprintf(stderr, "computation error: %s\n", e.what());
        return 2;
    }
    return 0;
}
