//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#include "airyscat/config.hpp"

#include <cstdint>
#include <cstdio>
#include <set>

#include <json.hpp>

namespace airyscat {

namespace {

using json = nlohmann::ordered_json;

void reject_unknown(const json& obj,
                    const std::set<std::string>& allowed,
                    const std::string& path)
{
    if (!obj.is_object())
        throw ConfigError("config: " + path + " must be an object");
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw ConfigError("config: unknown key '" + path + "." + it.key() + "'");
}

double get_number(const json& obj,
                  const std::string& key,
                  const std::string& path,
                  std::optional<double> fallback = {})
{
    if (!obj.contains(key))
    {
        if (fallback)
            return *fallback;
        throw ConfigError("config: missing required key '" + path + "." + key + "'");
    }
    const json& v = obj.at(key);
    if (!v.is_number())
        throw ConfigError("config: '" + path + "." + key + "' must be a number");
    return v.get<double>();
}

int get_int(const json& obj,
            const std::string& key,
            const std::string& path,
            std::optional<int> fallback = {})
{
    if (!obj.contains(key) && fallback)
        return *fallback;
    double v = get_number(obj, key, path);
    int i = int(v);
    if (double(i) != v)
        throw ConfigError("config: '" + path + "." + key + "' must be an integer");
    return i;
}

// shortest round-trip double rendering
json num(double v)
{
    return json(v);
}

}  // namespace

PotentialSpec ScenarioConfig::potential_spec() const
{
    if (potential.kind == "hydrogen")
        return hydrogen_spec(potential.a);
    return yukawa_spec(potential.V0, potential.mu);
}

AiryPacketParams ScenarioConfig::packet_params() const
{
    return AiryPacketParams::make(packet.sigma_perp, packet.sigma_z, packet.xi_x,
                                  packet.xi_y, packet.b_x, packet.b_y);
}

BeamKinematics ScenarioConfig::beam_kinematics() const
{
    return BeamKinematics::make(kinematics.p_i_a, kinematics.kappa0_a);
}

ScenarioConfig parse_config(const std::string& json_text)
{
    json root;
    try
    {
        root = json::parse(json_text);
    }
    catch (const json::exception& e)
    {
        throw ConfigError(std::string("config: JSON parse failure: ") + e.what());
    }
    reject_unknown(root, {"potential", "packet", "kinematics", "grid", "target",
                          "analysis"},
                   "$");

    ScenarioConfig cfg;

    if (root.contains("potential"))
    {
        const json& p = root.at("potential");
        reject_unknown(p, {"kind", "a", "V0", "mu"}, "potential");
        if (p.contains("kind"))
        {
            if (!p.at("kind").is_string())
                throw ConfigError("config: 'potential.kind' must be a string");
            cfg.potential.kind = p.at("kind").get<std::string>();
        }
        if (cfg.potential.kind != "hydrogen" && cfg.potential.kind != "yukawa")
            throw ConfigError("config: 'potential.kind' must be 'hydrogen' or 'yukawa'");
        cfg.potential.a = get_number(p, "a", "potential", 1.0);
        cfg.potential.V0 = get_number(p, "V0", "potential", 1.0);
        cfg.potential.mu = get_number(p, "mu", "potential", 1.0);
    }

    if (root.contains("packet"))
    {
        const json& p = root.at("packet");
        reject_unknown(p, {"sigma_perp", "sigma_z", "xi_x", "xi_y", "b_x", "b_y"},
                       "packet");
        cfg.packet.sigma_perp = get_number(p, "sigma_perp", "packet", 1.0);
        cfg.packet.sigma_z = get_number(p, "sigma_z", "packet", 50.0);
        cfg.packet.xi_x = get_number(p, "xi_x", "packet", 2.0);
        cfg.packet.xi_y = get_number(p, "xi_y", "packet", 2.0);
        cfg.packet.b_x = get_number(p, "b_x", "packet", 0.0);
        cfg.packet.b_y = get_number(p, "b_y", "packet", 0.0);
    }

    if (root.contains("kinematics"))
    {
        const json& k = root.at("kinematics");
        reject_unknown(k, {"p_i_a", "kappa0_a"}, "kinematics");
        cfg.kinematics.p_i_a = get_number(k, "p_i_a", "kinematics", 10.0);
        cfg.kinematics.kappa0_a = get_number(k, "kappa0_a", "kinematics", 0.0);
    }

    if (root.contains("grid"))
    {
        const json& g = root.at("grid");
        reject_unknown(g, {"theta_x_min", "theta_x_max", "theta_y_min",
                           "theta_y_max", "nx", "ny"},
                       "grid");
        cfg.grid.theta_x_min = get_number(g, "theta_x_min", "grid", -0.3);
        cfg.grid.theta_x_max = get_number(g, "theta_x_max", "grid", 0.3);
        cfg.grid.theta_y_min = get_number(g, "theta_y_min", "grid", -0.3);
        cfg.grid.theta_y_max = get_number(g, "theta_y_max", "grid", 0.3);
        cfg.grid.nx = get_int(g, "nx", "grid", 201);
        cfg.grid.ny = get_int(g, "ny", "grid", 201);
    }

    if (root.contains("target") && !root.at("target").is_null())
    {
        const json& t = root.at("target");
        reject_unknown(t, {"b0_x", "b0_y", "sigma_b"}, "target");
        TargetDistribution tgt;
        tgt.b0_x = get_number(t, "b0_x", "target", 0.0);
        tgt.b0_y = get_number(t, "b0_y", "target", 0.0);
        tgt.sigma_b = get_number(t, "sigma_b", "target");
        if (tgt.sigma_b < 0.0)
            throw ConfigError("config: 'target.sigma_b' must be >= 0");
        cfg.target = tgt;
    }

    if (root.contains("analysis"))
    {
        const json& a = root.at("analysis");
        reject_unknown(a, {"theta_fixed", "phi_reference"}, "analysis");
        cfg.analysis.theta_fixed = get_number(a, "theta_fixed", "analysis", 0.1);
        cfg.analysis.phi_reference
            = get_number(a, "phi_reference", "analysis", 0.78539816339744831);
    }

    // re-validate module invariants with field-path context
    try
    {
        cfg.packet_params();
    }
    catch (const std::invalid_argument& e)
    {
        throw ConfigError(std::string("config: packet: ") + e.what());
    }
    try
    {
        cfg.beam_kinematics();
    }
    catch (const std::invalid_argument& e)
    {
        throw ConfigError(std::string("config: kinematics: ") + e.what());
    }
    try
    {
        cfg.potential_spec();
    }
    catch (const std::invalid_argument& e)
    {
        throw ConfigError(std::string("config: potential: ") + e.what());
    }
    if (cfg.grid.nx < 2 || cfg.grid.ny < 2)
        throw ConfigError("config: 'grid.nx' and 'grid.ny' must be >= 2");
    if (cfg.grid.theta_x_min >= cfg.grid.theta_x_max
        || cfg.grid.theta_y_min >= cfg.grid.theta_y_max)
        throw ConfigError("config: grid bounds must satisfy min < max");
    constexpr double kHalfPi = 1.5707963267948966;
    if (std::abs(cfg.grid.theta_x_min) >= kHalfPi
        || std::abs(cfg.grid.theta_x_max) >= kHalfPi
        || std::abs(cfg.grid.theta_y_min) >= kHalfPi
        || std::abs(cfg.grid.theta_y_max) >= kHalfPi)
        throw ConfigError("config: grid bounds must lie in the forward hemisphere");
    if (cfg.analysis.theta_fixed < 0.0 || cfg.analysis.theta_fixed >= kHalfPi)
        throw ConfigError("config: 'analysis.theta_fixed' must lie in [0, pi/2)");

    return cfg;
}

std::string serialize_config(const ScenarioConfig& cfg)
{
    json root;
    root["potential"] = {{"kind", cfg.potential.kind},
                         {"a", num(cfg.potential.a)},
                         {"V0", num(cfg.potential.V0)},
                         {"mu", num(cfg.potential.mu)}};
    root["packet"] = {{"sigma_perp", num(cfg.packet.sigma_perp)},
                      {"sigma_z", num(cfg.packet.sigma_z)},
                      {"xi_x", num(cfg.packet.xi_x)},
                      {"xi_y", num(cfg.packet.xi_y)},
                      {"b_x", num(cfg.packet.b_x)},
                      {"b_y", num(cfg.packet.b_y)}};
    root["kinematics"] = {{"p_i_a", num(cfg.kinematics.p_i_a)},
                          {"kappa0_a", num(cfg.kinematics.kappa0_a)}};
    root["grid"] = {{"theta_x_min", num(cfg.grid.theta_x_min)},
                    {"theta_x_max", num(cfg.grid.theta_x_max)},
                    {"theta_y_min", num(cfg.grid.theta_y_min)},
                    {"theta_y_max", num(cfg.grid.theta_y_max)},
                    {"nx", cfg.grid.nx},
                    {"ny", cfg.grid.ny}};
    if (cfg.target)
        root["target"] = {{"b0_x", num(cfg.target->b0_x)},
                          {"b0_y", num(cfg.target->b0_y)},
                          {"sigma_b", num(cfg.target->sigma_b)}};
    root["analysis"] = {{"theta_fixed", num(cfg.analysis.theta_fixed)},
                        {"phi_reference", num(cfg.analysis.phi_reference)}};
    return root.dump(2) + "\n";
}

std::string config_hash(const ScenarioConfig& cfg)
{
    std::string text = serialize_config(cfg);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text)
    {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace airyscat
