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

#include "weakpolar/experiment.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "weakpolar/error.hpp"

namespace weakpolar::experiment {

using qmath::kPi;

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double chi2_at(double theta, double purity, std::span<const PurityMeasurement> data,
               const std::function<double(double)> &modulus_of_alpha) {
    double total = 0.0;
    for (const auto &m : data) {
        double model = protocol::visibility_closed_form(theta, purity, modulus_of_alpha(m.alpha));
        double var = std::max((1.0 - m.visibility * m.visibility) / static_cast<double>(m.counts), 1e-12);
        double d = m.visibility - model;
        total += d * d / var;
    }
    return total;
}

}  // namespace

std::string preset_name(Preset p) {
    switch (p) {
        case Preset::kFigure2:
            return "figure2";
        case Preset::kFigure3:
            return "figure3";
        case Preset::kCustom:
            return "custom";
    }
    return "custom";
}

Preset parse_preset(const std::string &name) {
    if (name == "figure2") {
        return Preset::kFigure2;
    }
    if (name == "figure3") {
        return Preset::kFigure3;
    }
    if (name == "custom") {
        return Preset::kCustom;
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown preset '" + name + "'");
}

void ScenarioSpec::validate() const {
    if (alpha_grid.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "alpha_grid must not be empty");
    }
    if (counts_per_setting < 1) {
        throw Error(ErrorCode::kInvalidArgument, "counts_per_setting must be at least 1");
    }
    if (xi_grid.size() < 3) {
        throw Error(ErrorCode::kInvalidArgument, "xi_grid needs at least three settings");
    }
    if (!(purity >= 0.0 && purity <= 1.0)) {
        throw Error(ErrorCode::kInvalidPurity, "P_m must lie in [0, 1]");
    }
    if (preset == Preset::kCustom && !(theta > 0.0 && theta < kPi)) {
        throw Error(ErrorCode::kDegenerateStrength, "theta must lie strictly inside (0, pi)");
    }
}

const std::array<MeterSetting, 3> &figure2_meters() {
    static const std::array<MeterSetting, 3> meters{{
        {0.499 * kPi, 0.882},
        {0.297 * kPi, 0.836},
        {0.092 * kPi, 0.956},
    }};
    return meters;
}

MeterSetting weak_baseline_meter() {
    return {0.025 * kPi, 0.982};
}

std::vector<double> default_alpha_grid() {
    std::vector<double> grid;
    for (int k = -98; k <= 98; ++k) {
        grid.push_back(0.005 * k * kPi);
    }
    return grid;
}

std::vector<double> default_xi_grid() {
    std::vector<double> grid;
    for (int k = 0; k < 24; ++k) {
        grid.push_back(2.0 * kPi * k / 24.0);
    }
    return grid;
}

std::vector<ScenarioSpec> expand_preset(const ScenarioSpec &base) {
    if (base.preset == Preset::kCustom) {
        return {base};
    }
    std::vector<ScenarioSpec> out;
    for (const auto &meter : figure2_meters()) {
        ScenarioSpec s = base;
        s.theta = meter.theta;
        s.purity = meter.purity;
        out.push_back(std::move(s));
    }
    return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ (a * 0xD1B54A32D192ED03ULL));
    return splitmix64(h ^ (b * 0xABC98388FB8FAC03ULL));
}

CountRecord sample_counts(double p13, std::uint64_t n_total, std::uint64_t seed, double xi) {
    if (!(p13 >= -1e-12 && p13 <= 1.0 + 1e-12)) {
        throw Error(ErrorCode::kInvalidProbability, "p13 must lie in [0, 1]");
    }
    p13 = std::clamp(p13, 0.0, 1.0);
    std::mt19937_64 rng(seed);
    std::binomial_distribution<std::uint64_t> dist(n_total, p13);
    CountRecord rec;
    rec.xi = xi;
    rec.n_total = n_total;
    rec.n13 = dist(rng);
    rec.n23 = n_total - rec.n13;
    return rec;
}

double raw_visibility(const CountRecord &record) {
    if (record.n_total == 0) {
        throw Error(ErrorCode::kInvalidArgument, "record has no counts");
    }
    return (static_cast<double>(record.n13) - static_cast<double>(record.n23)) / static_cast<double>(record.n_total);
}

VisibilityEstimate estimate_visibility_phase(std::span<const CountRecord> records) {
    Eigen::Matrix3d normal = Eigen::Matrix3d::Zero();
    Eigen::Vector3d rhs = Eigen::Vector3d::Zero();
    double total = 0.0;
    for (const auto &r : records) {
        if (r.n_total == 0 || r.n13 + r.n23 != r.n_total) {
            throw Error(ErrorCode::kInvalidArgument, "count records must be positive and satisfy n13 + n23 = n_total");
        }
        double w = static_cast<double>(r.n_total);
        double y = static_cast<double>(r.n13) / w;
        Eigen::Vector3d basis(1.0, std::cos(r.xi), std::sin(r.xi));
        normal += w * basis * basis.transpose();
        rhs += w * y * basis;
        total += w;
    }
    Eigen::ColPivHouseholderQR<Eigen::Matrix3d> qr(normal);
    qr.setThreshold(1e-10);
    if (records.size() < 3 || qr.rank() < 3) {
        throw Error(ErrorCode::kInvalidArgument, "plate settings do not resolve a full fringe");
    }
    Eigen::Vector3d coef = qr.solve(rhs);
    double amp = std::hypot(coef(1), coef(2));
    double n_mean = total / static_cast<double>(records.size());

    VisibilityEstimate out;
    if (amp <= 1e-12) {
        out.no_fringe = true;
        out.stderr_v = estimator_std(0.0, static_cast<std::uint64_t>(std::llround(n_mean)));
        return out;
    }
    out.phase = qmath::wrap_phase(std::atan2(coef(2), coef(1)));
    // N13 at the fitted maximum and N23 = N - N13 at the same setting.
    double frac13 = coef(0) + amp;
    out.visibility = 2.0 * frac13 - 1.0;
    double v_clamped = std::clamp(out.visibility, 0.0, 1.0);
    out.stderr_v = std::sqrt((1.0 - v_clamped * v_clamped) / n_mean);
    return out;
}

double snr(double visibility, std::uint64_t n) {
    if (!(visibility >= 0.0 && visibility <= 1.0) || n < 1) {
        throw Error(ErrorCode::kInvalidArgument, "snr needs V in [0, 1] and N >= 1");
    }
    if (visibility == 1.0) {
        return std::numeric_limits<double>::infinity();
    }
    return visibility / std::sqrt(1.0 - visibility * visibility) * std::sqrt(static_cast<double>(n));
}

double estimator_std(double visibility, std::uint64_t n) {
    if (!(visibility >= 0.0 && visibility <= 1.0) || n < 1) {
        throw Error(ErrorCode::kInvalidArgument, "estimator_std needs V in [0, 1] and N >= 1");
    }
    return std::sqrt((1.0 - visibility * visibility) / static_cast<double>(n));
}

std::vector<double> detector_probabilities(const ProtocolConfig &cfg, std::span<const double> xi_grid) {
    qmath::BlochVector q = protocol::meter_configs(cfg.meter, cfg.control).q_re;
    std::vector<double> out;
    out.reserve(xi_grid.size());
    for (double xi : xi_grid) {
        auto bf = protocol::bruteforce_conditional(cfg, q, xi);
        out.push_back(bf.p_joint_q / bf.postselect_prob);
    }
    return out;
}

std::vector<CountRecord> sample_scan(const ProtocolConfig &cfg, std::span<const double> xi_grid,
                                     std::uint64_t counts, std::uint64_t seed, std::uint64_t alpha_index) {
    std::vector<double> p = detector_probabilities(cfg, xi_grid);
    std::vector<CountRecord> out;
    out.reserve(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        out.push_back(sample_counts(p[k], counts, derive_seed(seed, alpha_index, k), xi_grid[k]));
    }
    return out;
}

PurityFit fit_purity(double theta, std::span<const PurityMeasurement> measurements,
                     const std::function<double(double)> &modulus_of_alpha) {
    if (measurements.size() < 3) {
        throw Error(ErrorCode::kInvalidArgument, "purity fit needs at least three measurements");
    }
    for (const auto &m : measurements) {
        if (m.counts == 0) {
            throw Error(ErrorCode::kInvalidArgument, "each measurement needs a positive count total");
        }
    }
    auto f = [&](double p) { return chi2_at(theta, p, measurements, modulus_of_alpha); };

    // Coarse scan brackets the global minimum, golden section refines it.
    constexpr int kGrid = 200;
    int best = 0;
    double best_val = f(0.0);
    for (int k = 1; k <= kGrid; ++k) {
        double v = f(static_cast<double>(k) / kGrid);
        if (v < best_val) {
            best_val = v;
            best = k;
        }
    }
    double lo = std::max(0.0, (best - 1.0) / kGrid);
    double hi = std::min(1.0, (best + 1.0) / kGrid);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > kPurityTolerance) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    PurityFit out;
    out.purity = 0.5 * (lo + hi);
    // The endpoints are admissible too; golden section never evaluates them.
    for (double edge : {0.0, 1.0}) {
        if (f(edge) < f(out.purity)) {
            out.purity = edge;
        }
    }
    out.chi2 = f(out.purity);
    out.boundary = out.purity <= kPurityTolerance || out.purity >= 1.0 - kPurityTolerance;
    return out;
}

std::vector<Figure2Row> run_figure2(const ScenarioSpec &spec) {
    spec.validate();
    std::vector<Figure2Row> rows;
    rows.reserve(spec.alpha_grid.size());
    for (std::size_t a = 0; a < spec.alpha_grid.size(); ++a) {
        double alpha = spec.alpha_grid[a];
        ProtocolConfig cfg = protocol::cnot_config(spec.theta, spec.purity, alpha);
        protocol::InterferenceResult scan = protocol::interference_scan(cfg, spec.xi_grid);
        std::vector<CountRecord> counts = sample_scan(cfg, spec.xi_grid, spec.counts_per_setting, spec.seed, a);

        Figure2Row row;
        row.alpha = alpha;
        row.v_theory = protocol::visibility_closed_form(spec.theta, spec.purity, std::abs(std::tan(alpha)));
        row.v_sampled = estimate_visibility_phase(counts).visibility;
        row.arg = scan.phase;
        row.criterion = protocol::no_eraser_ratio(cfg);
        rows.push_back(row);
    }
    return rows;
}

std::vector<Figure3Row> run_figure3(const ScenarioSpec &spec) {
    spec.validate();
    MeterSetting weak = weak_baseline_meter();
    std::vector<Figure3Row> rows;
    rows.reserve(spec.alpha_grid.size());
    for (double alpha : spec.alpha_grid) {
        protocol::PolarEstimate polar = protocol::polar_modular_value(protocol::cnot_config(spec.theta, spec.purity, alpha));
        Figure3Row row;
        row.alpha = alpha;
        row.wv_exact = std::tan(alpha);
        // The argument is 0 or pi here, so the weak value is the signed modulus.
        row.wv_polar = polar.modulus * std::cos(polar.argument);
        row.wv_weakapprox = protocol::weak_estimate(protocol::cnot_config(weak.theta, weak.purity, alpha)).re();
        rows.push_back(row);
    }
    return rows;
}

MonteCarloSummary run_montecarlo(double visibility, std::uint64_t counts, std::uint64_t trials,
                                 std::uint64_t seed) {
    if (!(visibility >= 0.0 && visibility <= 1.0)) {
        throw Error(ErrorCode::kInvalidArgument, "visibility must lie in [0, 1]");
    }
    if (counts < 1 || trials < 2) {
        throw Error(ErrorCode::kInvalidArgument, "montecarlo needs counts >= 1 and trials >= 2");
    }
    MonteCarloSummary out;
    out.visibility = visibility;
    out.counts = counts;
    out.trials = trials;
    double p13 = 0.5 * (1.0 + visibility);
    double sum = 0.0, sum_sq = 0.0;
    out.rows.reserve(trials);
    for (std::uint64_t t = 0; t < trials; ++t) {
        CountRecord rec = sample_counts(p13, counts, derive_seed(seed, t, 0));
        double v = raw_visibility(rec);
        out.rows.push_back({t, rec.n13, rec.n23, v});
        sum += v;
        sum_sq += v * v;
    }
    double n = static_cast<double>(trials);
    out.mean = sum / n;
    out.stddev = std::sqrt(std::max(0.0, (sum_sq - n * out.mean * out.mean) / (n - 1.0)));
    out.sigma_v = estimator_std(visibility, counts);
    out.snr = snr(visibility, counts);
    return out;
}

}  // namespace weakpolar::experiment
