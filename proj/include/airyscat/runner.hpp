//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <string>

#include "airyscat/config.hpp"

namespace airyscat {

inline constexpr const char* kToolVersion = "1.0.0";

struct RunOptions
{
    std::string out_dir = ".";
    unsigned threads = 0;       // 0 = hardware concurrency
    double tolerance = 1e-8;    // quadrature relative tolerance
    std::uint64_t seed = 20260825;  // verify-suite draws
};

/// Thrown by run_verify when any amplitude pair disagrees (exit code 3).
class VerificationFailure : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

void run_pattern(const ScenarioConfig& cfg, const RunOptions& opt);
void run_azimuth(const ScenarioConfig& cfg, const RunOptions& opt);
void run_special_points(const ScenarioConfig& cfg, const RunOptions& opt);
void run_mesoscopic(const ScenarioConfig& cfg, const RunOptions& opt);
void run_macroscopic(const ScenarioConfig& cfg, const RunOptions& opt);
void run_critical_size(const ScenarioConfig& cfg, const RunOptions& opt);
void run_verify(const ScenarioConfig& cfg, const RunOptions& opt);

}  // namespace airyscat
