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

// Quantum-eraser measurement of modular values.
//
// A qubit meter rho_m = I/2 + (P/2) m.sigma controls the probe evolution
//   U_gate = Pi_r (x) I + e^{i delta} Pi_-r (x) exp(-i g A),
// a phase plate shifts |r> against |-r>, the meter is read along q (q.r = 0
// erases which-path information) and the probe is post-selected on psi_f.
// Every closed form below depends on the modular value only through
//   A_eff = e^{i delta} <f|exp(-i g A)|i> / <f|i>,
// which is the plain modular value for delta = 0 and the Pauli weak value for
// the CNOT preset.
//
// The plate setting xi applies phase_shifter(r, -xi), the shift that
// compensates arg A_eff: the joint probability at q_re is c (1 + V cos(phi - xi))
// with phi = arg A_eff.

#ifndef WEAKPOLAR_PROTOCOL_HPP
#define WEAKPOLAR_PROTOCOL_HPP

#include <span>
#include <vector>

#include "weakpolar/qmath.hpp"
#include "weakpolar/values.hpp"

namespace weakpolar::protocol {

using qmath::BlochVector;
using qmath::cplx;
using qmath::Operator;
using qmath::PureState;
using values::ComplexValue;

inline constexpr double kEraserTol = 1e-9;
inline constexpr double kDiscriminantClamp = 1e-12;
inline constexpr double kModelResidualTol = 1e-8;
inline constexpr double kPostselectionFloor = 1e-15;

struct ProtocolConfig {
    BlochVector meter{0.0, 0.0, 1.0};    // m
    double purity = 1.0;                 // P_m
    BlochVector control{0.0, 0.0, 1.0};  // r
    Operator observable = qmath::pauli_z();
    double coupling = 0.0;    // g
    double gate_phase = 0.0;  // delta
    PureState pre = PureState::zero();
    PureState post = PureState::zero();

    /// theta = arccos(m.r) in [0, pi].
    double strength() const;
    /// <psi_f|psi_i>.
    cplx postselection_overlap() const;
    /// True when |<psi_f|psi_i>| <= 1e-12; A_m is never formed then.
    bool orthogonal_postselection() const;
    /// Throws on non-unit directions, purity outside [0,1] or a non-Hermitian observable.
    void validate() const;
};

/// cos(alpha)|0> + sin(alpha)|1>, the linear post-selection family.
PureState linear_polarization(double alpha);

/// The CNOT experiment: r = z, m = (sin theta, 0, cos theta), A = sigma_x / 2,
/// g = pi, delta = pi/2, psi_i = |0>, psi_f = linear_polarization(alpha).
ProtocolConfig cnot_config(double theta, double purity, double alpha);

/// Pi_r (x) I + e^{i delta} Pi_-r (x) exp(-i g A); 4x4, meter first.
Operator build_gate(const ProtocolConfig &cfg);

/// Pi_r + e^{i xi} Pi_-r.
Operator phase_shifter(const BlochVector &r, double xi);

struct MeterConfigs {
    BlochVector q_re;
    BlochVector q_im;
};

/// q_re: normalised m - (m.r) r; q_im: normalised r x m.
MeterConfigs meter_configs(const BlochVector &m, const BlochVector &r);

/// e^{i delta} A_m. Throws kOrthogonalPostselection.
ComplexValue effective_modular_value(const ProtocolConfig &cfg);

struct ConditionalAverage {
    double value = 0.0;
    /// Set when <f|i> vanished and the unnormalised limit form was used.
    bool orthogonal_limit = false;
};

/// Closed-form post-selected meter average along q (requires q.r = 0).
ConditionalAverage conditional_meter_average(const ProtocolConfig &cfg, const BlochVector &q);

struct BruteForceResult {
    double average = 0.0;
    double p_joint_q = 0.0;
    double p_joint_negq = 0.0;
    double postselect_prob = 0.0;
};

/// Joint probability Tr[(Pi_q (x) |s><s|) rho'] for the full 4x4 evolution at
/// plate setting xi. Accepts any unit q.
double joint_probability(const ProtocolConfig &cfg, const BlochVector &q, const PureState &probe, double xi);

/// Density-matrix oracle: no closed forms. Throws kNoPostselection when the
/// post-selected pair has probability below 1e-15.
BruteForceResult bruteforce_conditional(const ProtocolConfig &cfg, const BlochVector &q, double xi);

/// (avg_re + i avg_im) / theta, valid only in the weak regime.
ComplexValue weak_estimate(double avg_re, double avg_im, double theta);

/// weak_estimate using closed-form averages at q_re and q_im.
ComplexValue weak_estimate(const ProtocolConfig &cfg);

/// (1 + P)/2 + (1 - P)/2 cot^2(epsilon / 2).
double coefficient_C(double epsilon, double purity);

/// 2 P tan(theta/2) |A| / (C_{theta+pi} + C_theta tan^2(theta/2) |A|^2).
double visibility_closed_form(double theta, double purity, double modulus);

struct ModulusRoots {
    double minus = 0.0;
    double plus = 0.0;
};

/// Both moduli compatible with a visibility.
ModulusRoots modulus_from_visibility(double visibility, double theta, double purity);

/// tan^2(theta/2) (C_theta / C_{theta+pi}) |A|^2; <= 1 selects the minus root.
double branch_criterion(double theta, double purity, double modulus);

/// Picks the root selected by a criterion value.
double select_root(const ModulusRoots &roots, double criterion);

/// p(-r|f) / p(r|f) with the meter read along r (no erasure). +inf when p(r|f) = 0.
double no_eraser_ratio(const ProtocolConfig &cfg);

struct InterferenceResult {
    double visibility = 0.0;
    double phase = 0.0;  // (-pi, pi]
    double p_max = 0.0;
    double p_min = 0.0;
    double postselect_prob = 0.0;
    double offset = 0.0;  // c in c (1 + V cos(phi - xi))
};

/// Default plate settings used by the exact three-point inversion.
std::vector<double> default_scan_settings();

/// Fits p(q_re, f; xi) to c (1 + V cos(phi - xi)) by exact inversion at
/// xi = 0, pi/2, pi and checks the model against every requested setting.
InterferenceResult interference_scan(const ProtocolConfig &cfg, std::span<const double> xi_values);
InterferenceResult interference_scan(const ProtocolConfig &cfg);

struct PolarEstimate {
    double visibility = 0.0;
    double argument = 0.0;
    double criterion = 0.0;
    ModulusRoots roots;
    double modulus = 0.0;

    ComplexValue value() const {
        return ComplexValue::polar(modulus, argument);
    }
};

/// Noiseless polar pipeline: interference scan for V and phi, the no-eraser
/// ratio as branch criterion, then the selected root of the modulus relation.
PolarEstimate polar_modular_value(const ProtocolConfig &cfg);

}  // namespace weakpolar::protocol

#endif
