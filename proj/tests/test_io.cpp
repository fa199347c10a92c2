// Copyright 2026 The weakpolar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "oracles.hpp"
#include "weakpolar/scenario_io.hpp"

namespace {

using namespace weakpolar;
using qmath::kPi;

std::string temp_file(const std::string &name, const std::string &content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}

TEST(Angles, Parse) {
    EXPECT_DOUBLE_EQ(io::parse_angle("0.297pi"), 0.297 * kPi);
    EXPECT_DOUBLE_EQ(io::parse_angle("pi"), kPi);
    EXPECT_DOUBLE_EQ(io::parse_angle("-pi"), -kPi);
    EXPECT_DOUBLE_EQ(io::parse_angle(" 0.5*pi "), 0.5 * kPi);
    EXPECT_DOUBLE_EQ(io::parse_angle("1.25"), 1.25);
    EXPECT_ERROR_CODE(io::parse_angle("abc"), ErrorCode::kInvalidArgument);
    EXPECT_ERROR_CODE(io::parse_angle("1.2x"), ErrorCode::kInvalidArgument);
}

TEST(Angles, Grids) {
    auto g = io::parse_angle_grid("0:pi:5");
    ASSERT_EQ(g.size(), 5u);
    EXPECT_DOUBLE_EQ(g[2], kPi / 2);
    EXPECT_DOUBLE_EQ(g[4], kPi);
    auto list = io::parse_angle_grid("0.1pi, 0.2pi,0.3");
    ASSERT_EQ(list.size(), 3u);
    EXPECT_DOUBLE_EQ(list[2], 0.3);
    EXPECT_EQ(io::parse_angle_grid("1.0").size(), 1u);
    EXPECT_ERROR_CODE(io::parse_angle_grid("0:1"), ErrorCode::kInvalidArgument);
    EXPECT_ERROR_CODE(io::parse_angle_grid("0:1:0"), ErrorCode::kInvalidArgument);
    EXPECT_ERROR_CODE(io::parse_angle_grid(" , "), ErrorCode::kInvalidArgument);
}

TEST(Format, RoundTrip) {
    for (double x : {0.1, -1.0 / 3.0, kPi, 1e-300, 6.02e23}) {
        EXPECT_EQ(std::strtod(io::format_double(x).c_str(), nullptr), x);
    }
    EXPECT_EQ(io::format_double(INFINITY), "inf");
    EXPECT_EQ(io::format_double(-INFINITY), "-inf");
    EXPECT_EQ(io::format_double(NAN), "nan");
}

TEST(Scenario, KeyValuesAndOverrides) {
    auto path = temp_file("weakpolar_kv.txt",
                          "# scenario\npreset = custom\ntheta = 0.3pi  # strength\nP_m=0.9\n\nseed = 17\n"
                          "alpha_grid = 0:0.4pi:3\ncounts_per_setting = 250\nxi_grid = 0:pi:4\n");
    auto kv = io::read_key_values(path);
    EXPECT_EQ(kv.at("theta"), "0.3pi");
    experiment::ScenarioSpec spec;
    io::apply_overrides(spec, kv);
    EXPECT_EQ(spec.preset, experiment::Preset::kCustom);
    EXPECT_DOUBLE_EQ(spec.theta, 0.3 * kPi);
    EXPECT_DOUBLE_EQ(spec.purity, 0.9);
    EXPECT_EQ(spec.seed, 17u);
    EXPECT_EQ(spec.counts_per_setting, 250u);
    EXPECT_EQ(spec.alpha_grid.size(), 3u);
    EXPECT_EQ(spec.xi_grid.size(), 4u);
    EXPECT_NO_THROW(spec.validate());

    experiment::ScenarioSpec reread;
    io::apply_overrides(reread, io::read_key_values(temp_file("weakpolar_kv2.txt", io::serialize_spec(spec))));
    EXPECT_EQ(io::serialize_spec(reread), io::serialize_spec(spec));

    EXPECT_ERROR_CODE(io::apply_overrides(spec, {{"colour", "blue"}}), ErrorCode::kInvalidArgument);
    EXPECT_ERROR_CODE(io::apply_overrides(spec, {{"seed", "-4"}}), ErrorCode::kInvalidArgument);
    EXPECT_ERROR_CODE(io::read_key_values(temp_file("weakpolar_bad.txt", "theta 3\n")),
                      ErrorCode::kInvalidArgument);
    EXPECT_ERROR_CODE(io::read_key_values("/nonexistent/dir/none.txt"), ErrorCode::kIo);
}

TEST(Digest, KnownVectors) {
    EXPECT_EQ(io::sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    EXPECT_EQ(io::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Tables, Headers) {
    experiment::Figure2Row r2{0.1, 0.2, 0.3, 0.0, 0.5};
    auto t2 = io::figure2_table({r2}).render();
    EXPECT_EQ(t2.substr(0, t2.find('\n')), "alpha_rad,V_theory,V_sampled,arg_rad,criterion");
    EXPECT_EQ(std::count(t2.begin(), t2.end(), '\n'), 2);
    auto t3 = io::figure3_table({}).render();
    EXPECT_EQ(t3, "alpha_rad,wv_exact,wv_polar,wv_weakapprox\n");
}

TEST(Manifest, Json) {
    io::RunManifest m;
    m.command = "figure2";
    m.spec_text = "seed = 1\n";
    m.spec_digest = io::sha256_hex(m.spec_text);
    m.seed = 1;
    m.output_paths = {"a.csv"};
    m.output_digests = {io::sha256_hex("x")};
    auto j = nlohmann::json::parse(m.to_json());
    EXPECT_EQ(j["command"], "figure2");
    EXPECT_EQ(j["seed"], 1);
    EXPECT_EQ(j["tool_version"], io::kToolVersion);
    EXPECT_EQ(j["outputs"][0]["path"], "a.csv");
    EXPECT_EQ(m.to_json(), m.to_json());
}

TEST(Files, UnwritablePath) {
    EXPECT_ERROR_CODE(io::write_file("/nonexistent/dir/out.csv", "x"), ErrorCode::kIo);
}

}  // namespace
