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

// Shot-noise emulation of the coincidence experiment.
//
// Each plate setting yields N post-selected events split between the two
// meter detectors: n13 (readout +q_re) and n23 (readout -q_re). Every random
// draw is keyed by (seed, alpha index, xi index), so a grid can be evaluated
// in any order and still produce identical counts.

#ifndef WEAKPOLAR_EXPERIMENT_HPP
#define WEAKPOLAR_EXPERIMENT_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "weakpolar/protocol.hpp"

namespace weakpolar::experiment {

using protocol::ProtocolConfig;

inline constexpr std::uint64_t kDefaultSeed = 20160413;
inline constexpr std::uint64_t kDefaultCounts = 4000;
inline constexpr double kPurityTolerance = 1e-5;

struct CountRecord {
    double xi = 0.0;
    std::uint64_t n13 = 0;
    std::uint64_t n23 = 0;
    std::uint64_t n_total = 0;
};

enum class Preset { kFigure2, kFigure3, kCustom };

std::string preset_name(Preset p);
/// Throws kInvalidArgument for unknown names.
Preset parse_preset(const std::string &name);

struct ScenarioSpec {
    Preset preset = Preset::kCustom;
    double theta = 0.0;
    double purity = 1.0;
    std::vector<double> alpha_grid;
    std::uint64_t counts_per_setting = kDefaultCounts;
    std::uint64_t seed = kDefaultSeed;
    std::vector<double> xi_grid;

    void validate() const;
};

struct MeterSetting {
    double theta;
    double purity;
};

/// Strong, intermediate and near-weak meters of the visibility experiment.
const std::array<MeterSetting, 3> &figure2_meters();
/// The weak-measurement baseline, theta_4 = 0.025 pi.
MeterSetting weak_baseline_meter();

/// alpha in [-0.49 pi, 0.49 pi] with step 0.005 pi.
std::vector<double> default_alpha_grid();
/// 24 uniform plate settings over [0, 2 pi).
std::vector<double> default_xi_grid();

/// One spec per meter setting of the preset (custom presets return {spec}).
std::vector<ScenarioSpec> expand_preset(const ScenarioSpec &base);

/// SplitMix64-mixed key for the cell (a, b) of a seeded grid.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

/// n13 ~ Binomial(n_total, p13), n23 = n_total - n13.
CountRecord sample_counts(double p13, std::uint64_t n_total, std::uint64_t seed, double xi = 0.0);

/// (n13 - n23) / (n13 + n23), the raw extremum estimator.
double raw_visibility(const CountRecord &record);

struct VisibilityEstimate {
    double visibility = 0.0;
    double phase = 0.0;
    double stderr_v = 0.0;
    bool no_fringe = false;
};

/// Least-squares fit of n13(xi) / n_total to c + a cos xi + b sin xi. V is read
/// at the fitted extremum xi = phi: (N13 - N23) / (N13 + N23) there.
VisibilityEstimate estimate_visibility_phase(std::span<const CountRecord> records);

/// V sqrt(N) / sqrt(1 - V^2); +inf for V = 1.
double snr(double visibility, std::uint64_t n);
/// sqrt((1 - V^2) / N).
double estimator_std(double visibility, std::uint64_t n);

/// p13(xi) = p(q_re) / (p(q_re) + p(-q_re)) for every setting.
std::vector<double> detector_probabilities(const ProtocolConfig &cfg, std::span<const double> xi_grid);

/// Samples one scan; cell seeds are derive_seed(seed, alpha_index, xi_index).
std::vector<CountRecord> sample_scan(const ProtocolConfig &cfg, std::span<const double> xi_grid,
                                     std::uint64_t counts, std::uint64_t seed, std::uint64_t alpha_index);

struct PurityMeasurement {
    double alpha = 0.0;
    double visibility = 0.0;
    std::uint64_t counts = 0;
};

struct PurityFit {
    double purity = 0.0;
    double chi2 = 0.0;
    bool boundary = false;
};

/// argmin over P in [0, 1] of sum (V_hat - V(theta, P, |A(alpha)|))^2 / sigma_V^2.
PurityFit fit_purity(double theta, std::span<const PurityMeasurement> measurements,
                     const std::function<double(double)> &modulus_of_alpha);

struct Figure2Row {
    double alpha = 0.0;
    double v_theory = 0.0;
    double v_sampled = 0.0;
    double arg = 0.0;
    double criterion = 0.0;
};

/// Visibility, argument and branch criterion of the CNOT experiment.
std::vector<Figure2Row> run_figure2(const ScenarioSpec &spec);

struct Figure3Row {
    double alpha = 0.0;
    double wv_exact = 0.0;
    double wv_polar = 0.0;
    double wv_weakapprox = 0.0;
};

/// sigma_x weak value: tan(alpha), the signed modulus from the polar pipeline at
/// spec.theta, and the weak-approximation estimate at the theta_4 baseline.
std::vector<Figure3Row> run_figure3(const ScenarioSpec &spec);

struct MonteCarloTrial {
    std::uint64_t trial = 0;
    std::uint64_t n13 = 0;
    std::uint64_t n23 = 0;
    double v_hat = 0.0;
};

struct MonteCarloSummary {
    double visibility = 0.0;
    std::uint64_t counts = 0;
    std::uint64_t trials = 0;
    double mean = 0.0;
    double stddev = 0.0;
    double sigma_v = 0.0;
    double snr = 0.0;
    std::vector<MonteCarloTrial> rows;
};

/// Repeats the single-setting measurement at xi = phi: n13 ~ Binomial(N, (1 + V)/2).
MonteCarloSummary run_montecarlo(double visibility, std::uint64_t counts, std::uint64_t trials,
                                 std::uint64_t seed);

}  // namespace weakpolar::experiment

#endif
