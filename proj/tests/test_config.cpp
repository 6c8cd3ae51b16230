//---------------------------------------------------------------------------//
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
#include "airyscat/config.hpp"

#include <doctest.h>

using namespace airyscat;

namespace {

const char* kMinimal = R"({
  "potential": {"kind": "hydrogen", "a": 1.0},
  "packet": {"sigma_perp": 1.0, "xi_x": 2.0, "xi_y": 2.0, "b_x": 4.8, "b_y": 4.8},
  "kinematics": {"p_i_a": 10.0}
})";

}  // namespace

TEST_CASE("config parsing and defaults")
{
    auto cfg = parse_config(kMinimal);
    CHECK(cfg.packet.sigma_z == 50.0);
    CHECK(cfg.kinematics.kappa0_a == 0.0);
    CHECK(cfg.grid.nx == 201);
    CHECK(cfg.grid.theta_x_max == 0.3);
    CHECK(!cfg.target.has_value());
    CHECK(cfg.analysis.theta_fixed == 0.1);

    auto packet = cfg.packet_params();
    CHECK(packet.norm == doctest::Approx(2.0));
    CHECK(cfg.beam_kinematics().p_f == doctest::Approx(10.0));
    CHECK(cfg.potential_spec().eta == 1.0);
}

TEST_CASE("unknown keys are rejected with paths")
{
    CHECK_THROWS_WITH_AS(parse_config(R"({"bogus": 1})"),
                         "config: unknown key '$.bogus'", ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"packet": {"sigma": 1.0}})"),
        "config: unknown key 'packet.sigma'", ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"grid": {"nx": 10, "step": 0.1}})"),
        "config: unknown key 'grid.step'", ConfigError);
}

TEST_CASE("config validation errors")
{
    CHECK_THROWS_AS(parse_config("not json"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"potential": {"kind": "coulomb"}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"packet": {"sigma_perp": -1.0}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"kinematics": {"p_i_a": 0.0}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"grid": {"nx": 1}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"grid": {"theta_x_min": 0.2, "theta_x_max": 0.1}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"grid": {"theta_x_max": 1.6}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"target": {"b0_x": 1.0}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"target": {"sigma_b": -2.0}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"packet": {"nx": "many"}})"), ConfigError);
}

TEST_CASE("serialization round trip is idempotent")
{
    auto cfg = parse_config(kMinimal);
    std::string once = serialize_config(cfg);
    std::string twice = serialize_config(parse_config(once));
    CHECK(once == twice);

    // with a target section
    auto cfg2 = parse_config(R"({"target": {"b0_x": 4.8, "b0_y": 4.8, "sigma_b": 1.0}})");
    std::string s2 = serialize_config(cfg2);
    CHECK(s2 == serialize_config(parse_config(s2)));
    CHECK(parse_config(s2).target->sigma_b == 1.0);
}

TEST_CASE("config hash")
{
    auto cfg = parse_config(kMinimal);
    CHECK(config_hash(cfg) == config_hash(parse_config(kMinimal)));
    CHECK(config_hash(cfg).size() == 16);

    auto other = cfg;
    other.packet.b_x = 0.0;
    CHECK(config_hash(cfg) != config_hash(other));
}
