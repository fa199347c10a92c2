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

#include "weakpolar/scenario_io.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "weakpolar/error.hpp"

namespace weakpolar::io {

namespace {

std::string trim(const std::string &s) {
    const char *ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) {
        return "";
    }
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string &text, const std::string &what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception &) {
        throw Error(ErrorCode::kInvalidArgument, "cannot parse " + what + " '" + text + "'");
    }
    if (used != text.size()) {
        throw Error(ErrorCode::kInvalidArgument, "trailing characters in " + what + " '" + text + "'");
    }
    return v;
}

std::uint64_t parse_count(const std::string &text, const std::string &what) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception &) {
        throw Error(ErrorCode::kInvalidArgument, "cannot parse " + what + " '" + text + "'");
    }
    if (used != text.size() || (!text.empty() && text[0] == '-')) {
        throw Error(ErrorCode::kInvalidArgument, "invalid " + what + " '" + text + "'");
    }
    return v;
}

std::string join_grid(const std::vector<double> &grid) {
    std::string out;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (k) {
            out += ',';
        }
        out += format_double(grid[k]);
    }
    return out;
}

}  // namespace

double parse_angle(const std::string &raw) {
    std::string text = trim(raw);
    if (text.size() >= 2 && text.compare(text.size() - 2, 2, "pi") == 0) {
        std::string coef = trim(text.substr(0, text.size() - 2));
        double c = 1.0;
        if (coef.empty() || coef == "+") {
            c = 1.0;
        } else if (coef == "-") {
            c = -1.0;
        } else {
            if (coef.back() == '*') {
                coef.pop_back();
            }
            c = parse_number(trim(coef), "angle");
        }
        return c * qmath::kPi;
    }
    return parse_number(text, "angle");
}

std::vector<double> parse_angle_grid(const std::string &raw) {
    std::string text = trim(raw);
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ':')) {
            parts.push_back(trim(part));
        }
        if (parts.size() != 3) {
            throw Error(ErrorCode::kInvalidArgument, "grid must be start:stop:count");
        }
        double a = parse_angle(parts[0]);
        double b = parse_angle(parts[1]);
        std::uint64_t n = parse_count(parts[2], "grid count");
        if (n < 1) {
            throw Error(ErrorCode::kInvalidArgument, "grid count must be positive");
        }
        std::vector<double> grid;
        for (std::uint64_t k = 0; k < n; ++k) {
            grid.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(k) / static_cast<double>(n - 1));
        }
        return grid;
    }
    std::vector<double> grid;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (!trim(part).empty()) {
            grid.push_back(parse_angle(part));
        }
    }
    if (grid.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "empty angle grid");
    }
    return grid;
}

std::string format_double(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::map<std::string, std::string> read_key_values(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::kIo, "cannot read config file '" + path + "'");
    }
    std::map<std::string, std::string> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw Error(ErrorCode::kInvalidArgument, path + ":" + std::to_string(lineno) + ": expected key = value");
        }
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

void apply_overrides(experiment::ScenarioSpec &spec, const std::map<std::string, std::string> &values) {
    for (const auto &[key, value] : values) {
        if (key == "preset") {
            spec.preset = experiment::parse_preset(value);
        } else if (key == "theta") {
            spec.theta = parse_angle(value);
        } else if (key == "P_m") {
            spec.purity = parse_number(value, "P_m");
        } else if (key == "alpha_grid") {
            spec.alpha_grid = parse_angle_grid(value);
        } else if (key == "counts_per_setting") {
            spec.counts_per_setting = parse_count(value, "counts_per_setting");
        } else if (key == "seed") {
            spec.seed = parse_count(value, "seed");
        } else if (key == "xi_grid") {
            spec.xi_grid = parse_angle_grid(value);
        } else {
            throw Error(ErrorCode::kInvalidArgument, "unknown scenario key '" + key + "'");
        }
    }
}

std::string serialize_spec(const experiment::ScenarioSpec &spec) {
    std::ostringstream out;
    out << "preset = " << experiment::preset_name(spec.preset) << "\n";
    out << "theta = " << format_double(spec.theta) << "\n";
    out << "P_m = " << format_double(spec.purity) << "\n";
    out << "alpha_grid = " << join_grid(spec.alpha_grid) << "\n";
    out << "counts_per_setting = " << spec.counts_per_setting << "\n";
    out << "seed = " << spec.seed << "\n";
    out << "xi_grid = " << join_grid(spec.xi_grid) << "\n";
    return out.str();
}

std::string sha256_hex(const std::string &data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw Error(ErrorCode::kIo, "sha256 digest failed");
    }
    static const char *hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int k = 0; k < len; ++k) {
        out += hex[digest[k] >> 4];
        out += hex[digest[k] & 0xF];
    }
    return out;
}

std::string CsvTable::render() const {
    std::string out;
    auto line = [&out](const std::vector<std::string> &cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (k) {
                out += ',';
            }
            out += cells[k];
        }
        out += '\n';
    };
    line(header);
    for (const auto &r : rows) {
        line(r);
    }
    return out;
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw Error(ErrorCode::kIo, "write to '" + path + "' failed");
    }
}

std::string RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["tool_version"] = tool_version;
    j["seed"] = seed;
    j["spec_digest"] = spec_digest;
    j["spec"] = spec_text;
    nlohmann::ordered_json outputs = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < output_paths.size(); ++k) {
        outputs.push_back({{"path", output_paths[k]}, {"sha256", output_digests.at(k)}});
    }
    j["outputs"] = outputs;
    return j.dump(2) + "\n";
}

CsvTable figure2_table(const std::vector<experiment::Figure2Row> &rows) {
    CsvTable t;
    t.header = {"alpha_rad", "V_theory", "V_sampled", "arg_rad", "criterion"};
    for (const auto &r : rows) {
        t.rows.push_back({format_double(r.alpha), format_double(r.v_theory), format_double(r.v_sampled),
                          format_double(r.arg), format_double(r.criterion)});
    }
    return t;
}

CsvTable figure3_table(const std::vector<experiment::Figure3Row> &rows) {
    CsvTable t;
    t.header = {"alpha_rad", "wv_exact", "wv_polar", "wv_weakapprox"};
    for (const auto &r : rows) {
        t.rows.push_back({format_double(r.alpha), format_double(r.wv_exact), format_double(r.wv_polar),
                          format_double(r.wv_weakapprox)});
    }
    return t;
}

}  // namespace weakpolar::io
