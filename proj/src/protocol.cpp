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

#include "weakpolar/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "weakpolar/error.hpp"

namespace weakpolar::protocol {

using qmath::kI;
using qmath::kPi;
using qmath::Matrix;
using qmath::Role;

namespace {

void require_strength(double theta) {
    if (!(theta > 0.0 && theta < kPi)) {
        throw Error(ErrorCode::kDegenerateStrength, "measurement strength must lie strictly inside (0, pi)");
    }
}

void require_purity(double purity) {
    if (!(purity >= 0.0 && purity <= 1.0)) {
        throw Error(ErrorCode::kInvalidPurity, "purity must lie in [0, 1]");
    }
}

Operator probe_projector(const PureState &s) {
    return qmath::projector(s);
}

// rho' = (R (x) I) U (rho_m (x) |i><i|) U^dag (R (x) I)^dag
Matrix evolved_state(const ProtocolConfig &cfg, double xi) {
    Operator rho =
        qmath::tensor_product(qmath::density_from_bloch(cfg.meter, cfg.purity), probe_projector(cfg.pre));
    Matrix u = build_gate(cfg).matrix();
    Matrix plate = qmath::tensor_product(phase_shifter(cfg.control, -xi), qmath::identity(2)).matrix();
    Matrix total = plate * u;
    return total * rho.matrix() * total.adjoint();
}

double measure(const Matrix &rho, const BlochVector &q, const PureState &probe) {
    Matrix effect = qmath::tensor_product(qmath::projector(q), probe_projector(probe)).matrix();
    return (effect * rho).trace().real();
}

}  // namespace

double ProtocolConfig::strength() const {
    return std::atan2(meter.cross(control).norm(), meter.dot(control));
}

cplx ProtocolConfig::postselection_overlap() const {
    return qmath::overlap(post, pre);
}

bool ProtocolConfig::orthogonal_postselection() const {
    return std::abs(postselection_overlap()) <= values::kOrthogonalityGuard;
}

void ProtocolConfig::validate() const {
    qmath::require_unit(meter, "meter direction");
    qmath::require_unit(control, "control direction");
    require_purity(purity);
    if (observable.dim() != 2 || !observable.is_hermitian()) {
        throw Error(ErrorCode::kInvalidObservable, "probe observable must be a Hermitian 2x2 operator");
    }
}

PureState linear_polarization(double alpha) {
    return PureState::normalize(std::cos(alpha), std::sin(alpha));
}

ProtocolConfig cnot_config(double theta, double purity, double alpha) {
    ProtocolConfig cfg;
    cfg.meter = {std::sin(theta), 0.0, std::cos(theta)};
    cfg.purity = purity;
    cfg.control = {0.0, 0.0, 1.0};
    cfg.observable = Operator::make(0.5 * qmath::pauli_x().matrix(), Role::kHermitian);
    cfg.coupling = kPi;
    cfg.gate_phase = kPi / 2.0;
    cfg.pre = PureState::zero();
    cfg.post = linear_polarization(alpha);
    return cfg;
}

Operator build_gate(const ProtocolConfig &cfg) {
    cfg.validate();
    Operator u_a = qmath::unitary_exp(cfg.observable, cfg.coupling);
    Matrix gate = qmath::tensor_product(qmath::projector(cfg.control), qmath::identity(2)).matrix() +
                  std::polar(1.0, cfg.gate_phase) * qmath::tensor_product(qmath::projector(-cfg.control), u_a).matrix();
    return Operator::make(std::move(gate), Role::kUnitary);
}

Operator phase_shifter(const BlochVector &r, double xi) {
    Matrix m = qmath::projector(r).matrix() + std::polar(1.0, xi) * qmath::projector(-r).matrix();
    return Operator::make(std::move(m), Role::kUnitary);
}

MeterConfigs meter_configs(const BlochVector &m, const BlochVector &r) {
    qmath::require_unit(m, "meter direction");
    qmath::require_unit(r, "control direction");
    BlochVector axis = r.cross(m);
    if (axis.norm() <= 1e-12) {
        throw Error(ErrorCode::kCollinearConfiguration, "meter and control directions are collinear");
    }
    MeterConfigs out;
    out.q_re = (m - m.dot(r) * r).normalized();
    out.q_im = axis.normalized();
#ifdef WEAKPOLAR_MUTATE_QIM_SIGN
    out.q_im = -out.q_im;
#endif
    return out;
}

ComplexValue effective_modular_value(const ProtocolConfig &cfg) {
    ComplexValue am = values::modular_value(cfg.observable, cfg.coupling, cfg.pre, cfg.post);
    return std::polar(1.0, cfg.gate_phase) * am.value();
}

ConditionalAverage conditional_meter_average(const ProtocolConfig &cfg, const BlochVector &q) {
    cfg.validate();
    qmath::require_unit(q, "meter readout direction");
    if (std::abs(q.dot(cfg.control)) > kEraserTol) {
        throw Error(ErrorCode::kEraserCondition, "readout direction must be orthogonal to the control direction");
    }
    const BlochVector &m = cfg.meter;
    const BlochVector &r = cfg.control;
    double real_weight = m.dot(q);
    double imag_weight = r.cross(m).dot(q);
    double pr = cfg.purity * r.dot(m);

    ConditionalAverage out;
    if (!cfg.orthogonal_postselection()) {
        cplx a = effective_modular_value(cfg).value();
        out.value = 2.0 * cfg.purity * (real_weight * a.real() + imag_weight * a.imag()) /
                    ((1.0 + pr) + (1.0 - pr) * std::norm(a));
        return out;
    }
    // Multiply through by |<f|i>|^2: A |<f|i>|^2 = e^{i delta} <f|U_A|i><i|f>.
    cplx fi = cfg.postselection_overlap();
    cplx fui = std::polar(1.0, cfg.gate_phase) *
               qmath::matrix_element(cfg.post, qmath::unitary_exp(cfg.observable, cfg.coupling), cfg.pre);
    cplx w = fui * std::conj(fi);
    double den = (1.0 + pr) * std::norm(fi) + (1.0 - pr) * std::norm(fui);
    if (den <= kPostselectionFloor) {
        throw Error(ErrorCode::kNoPostselection, "post-selected sub-ensemble is empty");
    }
    out.value = 2.0 * cfg.purity * (real_weight * w.real() + imag_weight * w.imag()) / den;
    out.orthogonal_limit = true;
    return out;
}

double joint_probability(const ProtocolConfig &cfg, const BlochVector &q, const PureState &probe, double xi) {
    return measure(evolved_state(cfg, xi), q, probe);
}

BruteForceResult bruteforce_conditional(const ProtocolConfig &cfg, const BlochVector &q, double xi) {
    qmath::require_unit(q, "meter readout direction");
    Matrix rho = evolved_state(cfg, xi);
    BruteForceResult out;
    out.p_joint_q = measure(rho, q, cfg.post);
    out.p_joint_negq = measure(rho, -q, cfg.post);
    out.postselect_prob = out.p_joint_q + out.p_joint_negq;
    if (out.postselect_prob < kPostselectionFloor) {
        throw Error(ErrorCode::kNoPostselection, "post-selection probability below 1e-15");
    }
    out.average = (out.p_joint_q - out.p_joint_negq) / out.postselect_prob;
    return out;
}

ComplexValue weak_estimate(double avg_re, double avg_im, double theta) {
    if (theta == 0.0) {
        throw Error(ErrorCode::kDivisionUndefined, "measurement strength theta must be nonzero");
    }
    return cplx(avg_re / theta, avg_im / theta);
}

ComplexValue weak_estimate(const ProtocolConfig &cfg) {
    MeterConfigs q = meter_configs(cfg.meter, cfg.control);
    double re = conditional_meter_average(cfg, q.q_re).value;
    double im = conditional_meter_average(cfg, q.q_im).value;
    return weak_estimate(re, im, cfg.strength());
}

double coefficient_C(double epsilon, double purity) {
    require_purity(purity);
    double s = std::sin(epsilon / 2.0);
    if (std::abs(s) < 1e-15) {
        throw Error(ErrorCode::kSingularCoefficient, "cot(epsilon/2) diverges at multiples of 2 pi");
    }
    double cot = std::cos(epsilon / 2.0) / s;
    return (1.0 + purity) / 2.0 + (1.0 - purity) / 2.0 * cot * cot;
}

double visibility_closed_form(double theta, double purity, double modulus) {
    require_strength(theta);
    require_purity(purity);
    if (!(modulus >= 0.0)) {
        throw Error(ErrorCode::kInvalidArgument, "modulus must be non-negative");
    }
    if (std::isinf(modulus)) {
        return 0.0;
    }
    double t = std::tan(theta / 2.0);
    double num = 2.0 * purity * t * modulus;
    return num / (coefficient_C(theta + kPi, purity) + coefficient_C(theta, purity) * t * t * modulus * modulus);
}

ModulusRoots modulus_from_visibility(double visibility, double theta, double purity) {
    require_strength(theta);
    require_purity(purity);
    if (!(visibility > 0.0 && visibility <= 1.0)) {
        throw Error(ErrorCode::kInvalidArgument, "visibility must lie in (0, 1]");
    }
    if (purity == 0.0) {
        throw Error(ErrorCode::kInconsistentVisibility, "a maximally mixed meter shows no fringes");
    }
    double c_theta = coefficient_C(theta, purity);
    double c_shift = coefficient_C(theta + kPi, purity);
    double t = std::tan(theta / 2.0);
    double disc = 1.0 - c_theta * c_shift * visibility * visibility / (purity * purity);
    if (disc < -kDiscriminantClamp) {
        throw Error(ErrorCode::kInconsistentVisibility, "visibility exceeds the maximum reachable at this strength and purity");
    }
    double root = std::sqrt(std::max(disc, 0.0));
    ModulusRoots out;
    out.plus = purity * (1.0 + root) / (c_theta * t * visibility);
    // Rationalised form of P (1 - sqrt(disc)) / (C_theta t V); no cancellation as V -> 0.
    out.minus = c_shift * visibility / (purity * t * (1.0 + root));
    return out;
}

double branch_criterion(double theta, double purity, double modulus) {
    double t = std::tan(theta / 2.0);
    return t * t * coefficient_C(theta, purity) / coefficient_C(theta + kPi, purity) * modulus * modulus;
}

double select_root(const ModulusRoots &roots, double criterion) {
    return criterion <= 1.0 ? roots.minus : roots.plus;
}

double no_eraser_ratio(const ProtocolConfig &cfg) {
    Matrix rho = evolved_state(cfg, 0.0);
    double p_r = measure(rho, cfg.control, cfg.post);
    double p_neg = measure(rho, -cfg.control, cfg.post);
    if (p_r <= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return p_neg / p_r;
}

std::vector<double> default_scan_settings() {
    std::vector<double> xs;
    for (int k = 0; k < 8; ++k) {
        xs.push_back(k * kPi / 4.0);
    }
    return xs;
}

InterferenceResult interference_scan(const ProtocolConfig &cfg, std::span<const double> xi_values) {
    std::vector<double> distinct(xi_values.begin(), xi_values.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 3) {
        throw Error(ErrorCode::kInvalidArgument, "an interference scan needs at least three distinct settings");
    }
    BlochVector q = meter_configs(cfg.meter, cfg.control).q_re;
    auto p_at = [&](double xi) { return bruteforce_conditional(cfg, q, xi).p_joint_q; };

    double p0 = p_at(0.0);
    double p_half = p_at(kPi / 2.0);
    double p_pi = p_at(kPi);
    double c = 0.5 * (p0 + p_pi);
    double x = 0.5 * (p0 - p_pi);
    double y = p_half - c;
    double v_fit = std::hypot(x, y) / c;
    double phi = qmath::wrap_phase(std::atan2(y, x));
    if (std::hypot(x, y) <= 1e-14 * c) {
        // A_eff = 0: rounding noise only, the phase is undefined.
        v_fit = 0.0;
        phi = 0.0;
    }

    double residual = 0.0;
    for (double xi : xi_values) {
        residual = std::max(residual, std::abs(p_at(xi) - c * (1.0 + v_fit * std::cos(phi - xi))));
    }
    if (residual > kModelResidualTol) {
        throw Error(ErrorCode::kModelViolation, "exact joint probabilities do not follow c (1 + V cos(phi - xi))");
    }

    BruteForceResult at_phi = bruteforce_conditional(cfg, q, phi);
    InterferenceResult out;
    out.phase = phi;
    out.offset = c;
    out.p_max = at_phi.p_joint_q;
    out.p_min = at_phi.p_joint_negq;
    out.postselect_prob = at_phi.postselect_prob;
    out.visibility = (out.p_max - out.p_min) / (out.p_max + out.p_min);
    if (std::abs(out.visibility - v_fit) > 1e-9) {
        throw Error(ErrorCode::kModelViolation, "extrema at xi = phi disagree with the fitted visibility");
    }
    return out;
}

InterferenceResult interference_scan(const ProtocolConfig &cfg) {
    std::vector<double> xs = default_scan_settings();
    return interference_scan(cfg, xs);
}

PolarEstimate polar_modular_value(const ProtocolConfig &cfg) {
    InterferenceResult scan = interference_scan(cfg);
    double theta = cfg.strength();
    PolarEstimate out;
    out.visibility = scan.visibility;
    out.argument = scan.phase;
    out.criterion = no_eraser_ratio(cfg);
    if (scan.visibility <= 0.0) {
        // No fringes: the modulus sits at 0 or diverges, the criterion tells which.
        out.modulus = out.criterion <= 1.0 ? 0.0 : std::numeric_limits<double>::infinity();
        out.roots = {out.modulus, out.modulus};
        return out;
    }
    out.roots = modulus_from_visibility(std::min(scan.visibility, 1.0), theta, cfg.purity);
    out.modulus = select_root(out.roots, out.criterion);
    return out;
}

}  // namespace weakpolar::protocol
