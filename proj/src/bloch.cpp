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

#include "weakpolar/bloch.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "weakpolar/error.hpp"

namespace weakpolar::bloch {

using qmath::cplx;
using qmath::kI;
using qmath::kPi;

namespace {

// Maps the polarisation frame (S1, S2, S3) = (<Z>, <X>, <Y>) onto (<X>, <Y>, <Z>).
qmath::Amplitudes apply_frame_map(cplx j0, cplx j1) {
    const double s = 1.0 / std::sqrt(2.0);
    return qmath::Amplitudes(s * (j0 - kI * j1), s * (j0 + kI * j1));
}

}  // namespace

BlochVector to_bloch(const SphericalCoord &c) {
    return {std::cos(2.0 * c.eta) * std::cos(2.0 * c.chi), std::sin(2.0 * c.eta) * std::cos(2.0 * c.chi),
            std::sin(2.0 * c.chi)};
}

SphericalCoord from_bloch(const BlochVector &v) {
    qmath::require_unit(v, "Bloch vector");
    double z = std::clamp(v.z / v.norm(), -1.0, 1.0);
    return {0.5 * std::atan2(v.y, v.x), 0.5 * std::asin(z)};
}

PureState spherical_state(const SphericalCoord &c) {
    double ce = std::cos(c.eta), se = std::sin(c.eta);
    double cc = std::cos(c.chi), sc = std::sin(c.chi);
    cplx j0 = ce * cc - kI * se * sc;
    cplx j1 = se * cc + kI * ce * sc;
    qmath::Amplitudes a = apply_frame_map(j0, j1);
    return PureState::normalize(a(0), a(1));
}

SolidAngle SolidAngle::from_value(double value) {
    Orientation o = Orientation::kDegenerate;
    if (value > 0.0) {
        o = Orientation::kCounterClockwise;
    } else if (value < 0.0) {
        o = Orientation::kClockwise;
    }
    return {value, o};
}

BlochVector mirror_image(const BlochVector &i, const BlochVector &n) {
    return 2.0 * n.dot(i) * n - i;
}

double pancharatnam_connection(const PureState &a, const PureState &b) {
    cplx ov = qmath::overlap(b, a);
    if (std::abs(ov) <= kOverlapGuard) {
        throw Error(ErrorCode::kUndefinedConnection, "states are orthogonal");
    }
    return qmath::wrap_phase(std::arg(ov));
}

double connection_closed_form(const SphericalCoord &a, const SphericalCoord &b) {
    double d = a.eta - b.eta;
    return qmath::wrap_phase(std::atan2(-std::sin(d) * std::sin(a.chi + b.chi), std::cos(d) * std::cos(a.chi - b.chi)));
}

SolidAngle bargmann_solid_angle(std::span<const PureState> loop) {
    if (loop.size() < 3) {
        throw Error(ErrorCode::kDegenerateLoop, "a loop needs at least three states");
    }
    cplx product = 1.0;
    const std::size_t k = loop.size();
    for (std::size_t e = 0; e < k; ++e) {
        const PureState &from = loop[e];
        const PureState &to = loop[(e + 1) % k];
        cplx ov = qmath::overlap(to, from);
        if (std::abs(ov) <= kOverlapGuard) {
            throw Error(ErrorCode::kDegenerateLoop,
                        "edge " + std::to_string(e) + " -> " + std::to_string((e + 1) % k) + " joins orthogonal states");
        }
        // Normalising each factor keeps long loops away from underflow.
        product *= ov / std::abs(ov);
    }
    return SolidAngle::from_value(-2.0 * std::arg(product));
}

SolidAngle bargmann_solid_angle(std::span<const BlochVector> loop) {
    std::vector<PureState> states;
    states.reserve(loop.size());
    for (const auto &v : loop) {
        states.push_back(qmath::state_from_bloch(v));
    }
    return bargmann_solid_angle(std::span<const PureState>(states));
}

BlochVector equator_lift(const BlochVector &v) {
    double rho = std::hypot(v.x, v.y);
    if (rho <= kOverlapGuard) {
        throw Error(ErrorCode::kAmbiguousLift, "state at a pole has no azimuth");
    }
    return {v.x / rho, v.y / rho, 0.0};
}

TriangleDecomposition decompose_triangle(const PureState &a, const PureState &b, const PureState &c) {
    std::array<BlochVector, 3> v{qmath::bloch_from_state(a), qmath::bloch_from_state(b),
                                 qmath::bloch_from_state(c)};
    std::array<PureState, 3> s{a, b, c};
    std::array<PureState, 3> lift{qmath::state_from_bloch(equator_lift(v[0])),
                                  qmath::state_from_bloch(equator_lift(v[1])),
                                  qmath::state_from_bloch(equator_lift(v[2]))};
    auto quad = [&](int p, int q) {
        std::array<PureState, 4> loop{s[p], s[q], lift[q], lift[p]};
        return bargmann_solid_angle(std::span<const PureState>(loop));
    };
    TriangleDecomposition out;
    out.ab = quad(0, 1);
    out.bc = quad(1, 2);
    out.ca = quad(2, 0);
    out.equator_term = bargmann_solid_angle(std::span<const PureState>(lift)).value;
    return out;
}

double weak_argument_geometric(const BlochVector &i, const BlochVector &n, const BlochVector &f) {
    qmath::require_unit(i, "initial direction");
    qmath::require_unit(n, "observable axis");
    qmath::require_unit(f, "final direction");
    // |<f|i>|^2 = (1 + i.f) / 2
    if (std::sqrt(std::max(0.0, 0.5 * (1.0 + i.dot(f)))) <= kOverlapGuard) {
        throw Error(ErrorCode::kOrthogonalPostselection, "initial and final directions are antipodal");
    }
    double num = n.cross(i).dot(f);
    double den = n.dot(i) + n.dot(f);
    if (std::abs(num) < 1e-14 && std::abs(den) < 1e-14) {
        throw Error(ErrorCode::kUndefinedArgument, "weak value vanishes, argument undefined");
    }
    return qmath::wrap_phase(std::atan2(num, den));
}

SolidAngle weak_argument_loop(const BlochVector &i, const BlochVector &n, const BlochVector &f) {
    std::array<BlochVector, 4> loop{i, n, mirror_image(i, n), f};
    return bargmann_solid_angle(std::span<const BlochVector>(loop));
}

double solid_angle_distance(double a, double b) {
    return std::abs(std::remainder(a - b, 4.0 * kPi));
}

}  // namespace weakpolar::bloch
