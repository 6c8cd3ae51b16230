//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "airyscat/observables.hpp"

namespace airyscat {

/// Configuration file or CLI validation problem (exit code 1).
class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct PotentialConfig
{
    std::string kind = "hydrogen";  // "hydrogen" | "yukawa"
    double a = 1.0;                 // hydrogen radius
    double V0 = 1.0;                // yukawa depth (Hartree)
    double mu = 1.0;                // yukawa inverse radius (1/Bohr)
};

struct AnalysisConfig
{
    double theta_fixed = 0.1;
    double phi_reference = 0.78539816339744831;  // pi/4
};

struct ScenarioConfig
{
    PotentialConfig potential;
    struct
    {
        double sigma_perp = 1.0;
        double sigma_z = 50.0;
        double xi_x = 2.0;
        double xi_y = 2.0;
        double b_x = 0.0;
        double b_y = 0.0;
    } packet;
    struct
    {
        double p_i_a = 10.0;
        double kappa0_a = 0.0;
    } kinematics;
    AngularGrid grid;
    std::optional<TargetDistribution> target;
    AnalysisConfig analysis;

    PotentialSpec potential_spec() const;
    AiryPacketParams packet_params() const;
    BeamKinematics beam_kinematics() const;
};

/// Parse and validate a config from JSON text. Unknown keys are rejected
/// with their field path; all module invariants are re-checked.
/// Throws ConfigError.
ScenarioConfig parse_config(const std::string& json_text);

/// Canonical JSON serialization; serialize(parse(text)) is idempotent.
std::string serialize_config(const ScenarioConfig& config);

/// FNV-1a 64-bit hash of the canonical serialization, as a hex string.
std::string config_hash(const ScenarioConfig& config);

}  // namespace airyscat
