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

// Text formats of the command-line front end: angles, grids, flat key-value
// scenario files, CSV tables and the run manifest.

#ifndef WEAKPOLAR_SCENARIO_IO_HPP
#define WEAKPOLAR_SCENARIO_IO_HPP

#include <map>
#include <string>
#include <vector>

#include "weakpolar/experiment.hpp"

namespace weakpolar::io {

inline constexpr const char *kToolVersion = "0.1.0";

/// "0.297pi", "pi", "-pi", "1.25" (radians).
double parse_angle(const std::string &text);

/// "start:stop:count" (inclusive linspace), "a,b,c", or a single angle.
std::vector<double> parse_angle_grid(const std::string &text);

/// Shortest text that round-trips: 17 significant digits, "inf"/"-inf"/"nan".
std::string format_double(double x);

/// Flat "key = value" lines; '#' starts a comment. Throws kIo / kInvalidArgument.
std::map<std::string, std::string> read_key_values(const std::string &path);

/// Applies recognised ScenarioSpec keys (preset, theta, P_m, alpha_grid,
/// counts_per_setting, seed, xi_grid). Unknown keys are rejected.
void apply_overrides(experiment::ScenarioSpec &spec, const std::map<std::string, std::string> &values);

/// Resolved spec in the same flat format, one key per line, fixed key order.
std::string serialize_spec(const experiment::ScenarioSpec &spec);

std::string sha256_hex(const std::string &data);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string render() const;
};

/// Writes content to path (binary, LF line endings). Throws kIo.
void write_file(const std::string &path, const std::string &content);

struct RunManifest {
    std::string command;
    std::string spec_text;
    std::string spec_digest;
    std::uint64_t seed = 0;
    std::vector<std::string> output_paths;
    std::vector<std::string> output_digests;
    std::string tool_version = kToolVersion;

    std::string to_json() const;
};

CsvTable figure2_table(const std::vector<experiment::Figure2Row> &rows);
CsvTable figure3_table(const std::vector<experiment::Figure3Row> &rows);

}  // namespace weakpolar::io

#endif
