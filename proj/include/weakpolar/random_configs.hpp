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

// Random draws used by the verification suites and the property tests.

#ifndef WEAKPOLAR_RANDOM_CONFIGS_HPP
#define WEAKPOLAR_RANDOM_CONFIGS_HPP

#include <cmath>
#include <random>

#include "weakpolar/protocol.hpp"
#include "weakpolar/qmath.hpp"

namespace weakpolar::random {

using Engine = std::mt19937_64;

inline double uniform(Engine &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Uniform on the sphere.
inline qmath::BlochVector unit_vector(Engine &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    for (;;) {
        qmath::BlochVector v{n(rng), n(rng), n(rng)};
        double len = v.norm();
        if (len > 1e-6) {
            return v * (1.0 / len);
        }
    }
}

/// Uniform on the great circle orthogonal to r.
inline qmath::BlochVector orthogonal_unit(Engine &rng, const qmath::BlochVector &r) {
    for (;;) {
        qmath::BlochVector v = unit_vector(rng);
        qmath::BlochVector p = v - v.dot(r) * r;
        if (p.norm() > 1e-3) {
            return p.normalized();
        }
    }
}

/// Unit vector at angle theta from r.
inline qmath::BlochVector at_angle(Engine &rng, const qmath::BlochVector &r, double theta) {
    qmath::BlochVector q = orthogonal_unit(rng, r);
    return (std::cos(theta) * r + std::sin(theta) * q).normalized();
}

inline qmath::PureState pure_state(Engine &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    return qmath::PureState::normalize({n(rng), n(rng)}, {n(rng), n(rng)});
}

/// a0 I + a . sigma with coefficients in [-1, 1].
inline qmath::Operator hermitian(Engine &rng) {
    double a0 = uniform(rng, -1.0, 1.0);
    double ax = uniform(rng, -1.0, 1.0);
    double ay = uniform(rng, -1.0, 1.0);
    double az = uniform(rng, -1.0, 1.0);
    qmath::Matrix m(2, 2);
    m << qmath::cplx(a0 + az, 0.0), qmath::cplx(ax, -ay), qmath::cplx(ax, ay), qmath::cplx(a0 - az, 0.0);
    return qmath::Operator::make(std::move(m), qmath::Role::kHermitian);
}

/// theta in (0.05pi, 0.95pi), P in [0.05, 1], |<f|i>| >= 0.05.
inline protocol::ProtocolConfig config(Engine &rng) {
    protocol::ProtocolConfig cfg;
    cfg.control = unit_vector(rng);
    cfg.meter = at_angle(rng, cfg.control, uniform(rng, 0.05, 0.95) * qmath::kPi);
    cfg.purity = uniform(rng, 0.05, 1.0);
    cfg.observable = hermitian(rng);
    cfg.coupling = uniform(rng, -qmath::kPi, qmath::kPi);
    cfg.gate_phase = uniform(rng, 0.0, 2.0 * qmath::kPi);
    cfg.pre = pure_state(rng);
    do {
        cfg.post = pure_state(rng);
    } while (std::abs(qmath::overlap(cfg.post, cfg.pre)) < 0.05);
    return cfg;
}

}  // namespace weakpolar::random

#endif
