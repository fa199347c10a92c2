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

// weakpolar command-line tool.

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "weakpolar/bloch.hpp"
#include "weakpolar/error.hpp"
#include "weakpolar/experiment.hpp"
#include "weakpolar/protocol.hpp"
#include "weakpolar/scenario_io.hpp"
#include "weakpolar/values.hpp"
#include "weakpolar/verify.hpp"

namespace fs = std::filesystem;
namespace wp = weakpolar;
using wp::io::format_double;
using wp::qmath::BlochVector;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitLibraryError = 2;
constexpr int kExitIoError = 3;

struct Common {
    std::optional<std::uint64_t> seed;
    std::string out = ".";
    std::optional<std::uint64_t> counts;
    std::optional<std::uint64_t> trials;
    std::optional<std::string> theta;
    std::optional<double> purity;
    std::optional<std::string> alpha;
    std::optional<std::string> config;
};

std::vector<double> parse_triple(const std::string &text, const char *what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        out.push_back(std::stod(part));
    }
    if (out.size() != 3 && out.size() != 4) {
        throw wp::Error(wp::ErrorCode::kInvalidArgument, std::string(what) + " needs comma-separated numbers");
    }
    return out;
}

BlochVector parse_direction(const std::string &text) {
    if (text == "x") {
        return {1.0, 0.0, 0.0};
    }
    if (text == "y") {
        return {0.0, 1.0, 0.0};
    }
    if (text == "z") {
        return {0.0, 0.0, 1.0};
    }
    auto v = parse_triple(text, "direction");
    if (v.size() != 3) {
        throw wp::Error(wp::ErrorCode::kInvalidArgument, "direction needs three components");
    }
    return BlochVector{v[0], v[1], v[2]}.normalized();
}

fs::path prepare_out(const std::string &dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw wp::Error(wp::ErrorCode::kIo, "cannot create output directory '" + dir + "'");
    }
    return fs::path(dir);
}

// Writes the tables and the manifest. Paths in the manifest are relative to the output directory.
void emit(const std::string &command, const fs::path &dir, const std::string &spec_text, std::uint64_t seed,
          const std::vector<std::pair<std::string, std::string>> &files) {
    wp::io::RunManifest manifest;
    manifest.command = command;
    manifest.spec_text = spec_text;
    manifest.spec_digest = wp::io::sha256_hex(spec_text);
    manifest.seed = seed;
    for (const auto &[name, content] : files) {
        wp::io::write_file((dir / name).string(), content);
        manifest.output_paths.push_back(name);
        manifest.output_digests.push_back(wp::io::sha256_hex(content));
        std::cout << (dir / name).string() << "\n";
    }
    wp::io::write_file((dir / (command + "_manifest.json")).string(), manifest.to_json());
}

wp::experiment::ScenarioSpec resolve_spec(wp::experiment::Preset preset, const Common &c) {
    wp::experiment::ScenarioSpec spec;
    spec.preset = preset;
    spec.alpha_grid = wp::experiment::default_alpha_grid();
    spec.xi_grid = wp::experiment::default_xi_grid();
    if (c.config) {
        wp::io::apply_overrides(spec, wp::io::read_key_values(*c.config));
    }
    if (c.theta || c.purity) {
        spec.preset = wp::experiment::Preset::kCustom;
    }
    if (c.theta) {
        spec.theta = wp::io::parse_angle(*c.theta);
    }
    if (c.purity) {
        spec.purity = *c.purity;
    }
    if (c.alpha) {
        spec.alpha_grid = wp::io::parse_angle_grid(*c.alpha);
    }
    if (c.counts) {
        spec.counts_per_setting = *c.counts;
    }
    if (c.seed) {
        spec.seed = *c.seed;
    }
    spec.validate();
    return spec;
}

int run_figure(const std::string &name, wp::experiment::Preset preset, const Common &c) {
    auto spec = resolve_spec(preset, c);
    auto specs = wp::experiment::expand_preset(spec);
    std::vector<std::pair<std::string, std::string>> files;
    std::string spec_text;
    for (std::size_t k = 0; k < specs.size(); ++k) {
        std::string file = specs.size() == 1 ? name + ".csv" : name + "_theta" + std::to_string(k + 1) + ".csv";
        wp::io::CsvTable table = preset == wp::experiment::Preset::kFigure3
                                     ? wp::io::figure3_table(wp::experiment::run_figure3(specs[k]))
                                     : wp::io::figure2_table(wp::experiment::run_figure2(specs[k]));
        files.emplace_back(file, table.render());
        spec_text += (k ? "\n" : "") + wp::io::serialize_spec(specs[k]);
    }
    emit(name, prepare_out(c.out), spec_text, spec.seed, files);
    return 0;
}

struct WeakValueArgs {
    std::string n;
    std::string hermitian;
    std::string alpha;
    std::string pre = "z";
    std::string post;
    std::string g = "pi";
};

wp::qmath::Operator observable_from(const WeakValueArgs &a) {
    if (!a.hermitian.empty()) {
        // h00, Re h01, Im h01, h11
        auto h = parse_triple(a.hermitian, "--hermitian");
        if (h.size() != 4) {
            throw wp::Error(wp::ErrorCode::kInvalidArgument, "--hermitian needs h00,re_h01,im_h01,h11");
        }
        wp::qmath::Matrix m(2, 2);
        m << h[0], wp::qmath::cplx(h[1], h[2]), wp::qmath::cplx(h[1], -h[2]), h[3];
        return wp::qmath::Operator::make(std::move(m), wp::qmath::Role::kHermitian);
    }
    return wp::qmath::pauli_along(parse_direction(a.n));
}

void print_value(const std::string &label, const wp::values::ComplexValue &v) {
    std::cout << label << "," << format_double(v.re()) << "," << format_double(v.im()) << ","
              << format_double(v.modulus()) << "," << format_double(v.argument()) << "\n";
}

int run_weak_value(const WeakValueArgs &a) {
    if (a.n.empty() == a.hermitian.empty()) {
        throw wp::Error(wp::ErrorCode::kInvalidArgument, "give exactly one of --n or --hermitian");
    }
    if (a.alpha.empty() == a.post.empty()) {
        throw wp::Error(wp::ErrorCode::kInvalidArgument, "give exactly one of --alpha or --post");
    }
    auto obs = observable_from(a);
    BlochVector i_dir = parse_direction(a.pre);
    auto psi_i = wp::qmath::state_from_bloch(i_dir);
    auto psi_f = a.alpha.empty() ? wp::qmath::state_from_bloch(parse_direction(a.post))
                                 : wp::protocol::linear_polarization(wp::io::parse_angle(a.alpha));
    double g = wp::io::parse_angle(a.g);
    auto aw = wp::values::weak_value(obs, psi_i, psi_f);
    auto am = wp::values::modular_value(obs, g, psi_i, psi_f);
    std::cout << "quantity,re,im,modulus,arg_rad\n";
    print_value("weak_value", aw);
    print_value("modular_value", am);
    if (!a.n.empty()) {
        std::string geo = "undefined";
        try {
            geo = format_double(wp::bloch::weak_argument_geometric(i_dir, parse_direction(a.n),
                                                                   wp::qmath::bloch_from_state(psi_f)));
        } catch (const wp::Error &e) {
            if (e.code() != wp::ErrorCode::kUndefinedArgument) {
                throw;
            }
        }
        std::cout << "geometric_arg,,,," << geo << "\n";
    }
    return 0;
}

int run_montecarlo(double visibility, const Common &c) {
    std::uint64_t counts = c.counts.value_or(10000);
    std::uint64_t trials = c.trials.value_or(1000);
    std::uint64_t seed = c.seed.value_or(wp::experiment::kDefaultSeed);
    auto summary = wp::experiment::run_montecarlo(visibility, counts, trials, seed);
    wp::io::CsvTable rows;
    rows.header = {"trial", "n13", "n23", "v_hat"};
    for (const auto &r : summary.rows) {
        rows.rows.push_back(
            {std::to_string(r.trial), std::to_string(r.n13), std::to_string(r.n23), format_double(r.v_hat)});
    }
    wp::io::CsvTable stats;
    stats.header = {"visibility", "counts", "trials", "mean", "stddev", "sigma_v", "snr"};
    stats.rows.push_back({format_double(summary.visibility), std::to_string(counts), std::to_string(trials),
                          format_double(summary.mean), format_double(summary.stddev), format_double(summary.sigma_v),
                          format_double(summary.snr)});
    std::string spec_text = "visibility = " + format_double(visibility) + "\ncounts = " + std::to_string(counts) +
                            "\ntrials = " + std::to_string(trials) + "\nseed = " + std::to_string(seed) + "\n";
    emit("montecarlo", prepare_out(c.out), spec_text, seed,
         {{"montecarlo.csv", rows.render()}, {"montecarlo_summary.csv", stats.render()}});
    return 0;
}

std::vector<wp::experiment::PurityMeasurement> read_measurements(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw wp::Error(wp::ErrorCode::kIo, "cannot read '" + path + "'");
    }
    std::vector<wp::experiment::PurityMeasurement> out;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (header) {
            if (line.rfind("alpha_rad,visibility,counts", 0) != 0) {
                throw wp::Error(wp::ErrorCode::kInvalidArgument, "expected header alpha_rad,visibility,counts");
            }
            header = false;
            continue;
        }
        if (line.empty()) {
            continue;
        }
        std::stringstream ss(line);
        std::string a, v, n;
        std::getline(ss, a, ',');
        std::getline(ss, v, ',');
        std::getline(ss, n, ',');
        out.push_back({std::stod(a), std::stod(v), std::stoull(n)});
    }
    return out;
}

int run_fit_purity(const std::string &data, const Common &c) {
    if (!c.theta) {
        throw wp::Error(wp::ErrorCode::kInvalidArgument, "fit-purity needs --theta");
    }
    double theta = wp::io::parse_angle(*c.theta);
    std::vector<wp::experiment::PurityMeasurement> data_points;
    if (!data.empty()) {
        data_points = read_measurements(data);
    } else {
        // Synthetic scan at --purity.
        if (!c.purity) {
            throw wp::Error(wp::ErrorCode::kInvalidArgument, "fit-purity needs --data or --purity");
        }
        auto alphas = c.alpha ? wp::io::parse_angle_grid(*c.alpha) : wp::io::parse_angle_grid("0.05pi:0.45pi:9");
        auto xi = wp::experiment::default_xi_grid();
        std::uint64_t counts = c.counts.value_or(wp::experiment::kDefaultCounts);
        std::uint64_t seed = c.seed.value_or(wp::experiment::kDefaultSeed);
        for (std::size_t k = 0; k < alphas.size(); ++k) {
            auto cfg = wp::protocol::cnot_config(theta, *c.purity, alphas[k]);
            auto records = wp::experiment::sample_scan(cfg, xi, counts, seed, k);
            data_points.push_back({alphas[k], wp::experiment::estimate_visibility_phase(records).visibility, counts});
        }
    }
    auto fit = wp::experiment::fit_purity(theta, data_points, [](double alpha) { return std::abs(std::tan(alpha)); });
    std::cout << "purity,chi2,boundary\n"
              << format_double(fit.purity) << "," << format_double(fit.chi2) << "," << (fit.boundary ? 1 : 0) << "\n";
    return 0;
}

int run_verify(const Common &c) {
    std::uint64_t trials = c.trials.value_or(wp::verify::kDefaultTrials);
    std::uint64_t seed = c.seed.value_or(wp::experiment::kDefaultSeed);
    bool ok = true;
    for (const auto &s : wp::verify::run_verification(trials, seed)) {
        std::cout << (s.passed ? "PASS " : "FAIL ") << s.name << " trials=" << s.trials
                  << " max_error=" << format_double(s.max_error) << " tol=" << format_double(s.tolerance) << "\n";
        if (!s.passed) {
            if (ok) {
                std::cout << "counterexample: " << s.counterexample << "\n";
            }
            ok = false;
        }
    }
    return ok ? 0 : kExitVerifyFailed;
}

void add_common(CLI::App *cmd, Common &c, bool figure) {
    cmd->add_option("--seed", c.seed, "RNG seed (default 20160413)");
    cmd->add_option("--out", c.out, "output directory");
    cmd->add_option("--counts", c.counts, "counts per setting");
    if (figure) {
        cmd->add_option("--theta", c.theta, "meter strength, e.g. 0.297pi");
        cmd->add_option("--purity", c.purity, "meter purity in [0, 1]");
        cmd->add_option("--alpha", c.alpha, "post-selection angle grid: a:b:n, a,b,c or one angle");
        cmd->add_option("--config", c.config, "flat key = value override file");
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Polar-form modular and weak values: simulation and verification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", wp::io::kToolVersion);

    Common common;
    WeakValueArgs wv;
    double visibility = 0.6;
    std::string data;

    auto *weak = app.add_subcommand("weak-value", "weak and modular value of one pre/post-selected pair");
    weak->add_option("--n", wv.n, "observable n . sigma: x, y, z or nx,ny,nz");
    weak->add_option("--hermitian", wv.hermitian, "observable entries h00,re_h01,im_h01,h11");
    weak->add_option("--alpha", wv.alpha, "post-selection cos(a)|0> + sin(a)|1>");
    weak->add_option("--pre", wv.pre, "initial Bloch direction (default z)");
    weak->add_option("--post", wv.post, "final Bloch direction");
    weak->add_option("--g", wv.g, "coupling g (default pi)");

    auto *fig2 = app.add_subcommand("figure2", "visibility, argument and branch criterion tables");
    add_common(fig2, common, true);
    auto *fig3 = app.add_subcommand("figure3", "weak value from the polar pipeline and the weak approximation");
    add_common(fig3, common, true);

    auto *mc = app.add_subcommand("montecarlo", "shot-noise statistics of the visibility estimator");
    add_common(mc, common, false);
    mc->add_option("--trials", common.trials, "number of seeded runs (default 1000)");
    mc->add_option("--visibility", visibility, "true visibility (default 0.6)")->check(CLI::Range(0.0, 1.0));

    auto *fit = app.add_subcommand("fit-purity", "chi-square fit of the meter purity");
    fit->add_option("--theta", common.theta, "meter strength")->required();
    fit->add_option("--data", data, "CSV alpha_rad,visibility,counts");
    fit->add_option("--purity", common.purity, "true purity for a synthetic scan");
    fit->add_option("--alpha", common.alpha, "alpha grid for the synthetic scan");
    fit->add_option("--counts", common.counts, "counts per setting for the synthetic scan");
    fit->add_option("--seed", common.seed, "RNG seed");

    auto *ver = app.add_subcommand("verify", "oracle-equivalence suites");
    ver->add_option("--trials", common.trials, "draws per suite (default 1000)");
    ver->add_option("--seed", common.seed, "RNG seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*weak) {
            return run_weak_value(wv);
        }
        if (*fig2) {
            return run_figure("figure2", wp::experiment::Preset::kFigure2, common);
        }
        if (*fig3) {
            return run_figure("figure3", wp::experiment::Preset::kFigure3, common);
        }
        if (*mc) {
            return run_montecarlo(visibility, common);
        }
        if (*fit) {
            return run_fit_purity(data, common);
        }
        return run_verify(common);
    } catch (const wp::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == wp::ErrorCode::kIo ? kExitIoError : kExitLibraryError;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: malformed number\n";
        return kExitLibraryError;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: number out of range\n";
        return kExitLibraryError;
    }
}
