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

#include "weakpolar/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <span>

#include "weakpolar/bloch.hpp"
#include "weakpolar/random_configs.hpp"
#include "weakpolar/values.hpp"

namespace weakpolar::verify {

using qmath::BlochVector;
using qmath::cplx;
using qmath::kPi;

namespace {

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string num(cplx z) {
    return "(" + num(z.real()) + "," + num(z.imag()) + ")";
}

std::string vec(const BlochVector &v) {
    return "[" + num(v.x) + "," + num(v.y) + "," + num(v.z) + "]";
}

// Records err against tol; keeps the first failure only.
void record(SuiteResult &s, double err, const std::string &what) {
    if (!(err <= s.tolerance)) {
        if (s.passed) {
            s.counterexample = what;
        }
        s.passed = false;
    }
    if (std::isnan(err)) {
        s.max_error = err;
    } else if (!std::isnan(s.max_error)) {
        s.max_error = std::max(s.max_error, err);
    }
    ++s.trials;
}

double relative(double a, double b) {
    return std::abs(a - b) / std::max(1.0, std::abs(b));
}

bool separated(const BlochVector &a, const BlochVector &b) {
    return 1.0 + a.dot(b) > 1e-2;
}

}  // namespace

std::string describe(const protocol::ProtocolConfig &cfg) {
    const auto &a = cfg.observable;
    return "m=" + vec(cfg.meter) + " P_m=" + num(cfg.purity) + " r=" + vec(cfg.control) + " A=[[" + num(a(0, 0)) +
           "," + num(a(0, 1)) + "],[" + num(a(1, 0)) + "," + num(a(1, 1)) + "]] g=" + num(cfg.coupling) +
           " delta=" + num(cfg.gate_phase) + " psi_i=[" + num(cfg.pre[0]) + "," + num(cfg.pre[1]) + "] psi_f=[" +
           num(cfg.post[0]) + "," + num(cfg.post[1]) + "]";
}

SuiteResult check_meter_average(std::uint64_t trials, std::uint64_t seed) {
    SuiteResult s{"meter average vs brute force", true, 0, 0.0, 1e-10, {}};
    random::Engine rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto cfg = random::config(rng);
        BlochVector q = random::orthogonal_unit(rng, cfg.control);
        double closed = protocol::conditional_meter_average(cfg, q).value;
        double brute = protocol::bruteforce_conditional(cfg, q, 0.0).average;
        record(s, std::abs(closed - brute), describe(cfg) + " q=" + vec(q));
    }
    return s;
}

SuiteResult check_modulus_round_trip(std::uint64_t trials, std::uint64_t seed) {
    SuiteResult s{"modulus round trip", true, 0, 0.0, 1e-9, {}};
    random::Engine rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        double theta = random::uniform(rng, 0.05, 0.95) * kPi;
        double purity = random::uniform(rng, 0.05, 1.0);
        double modulus = std::pow(10.0, random::uniform(rng, -2.0, 2.0));
        double v = protocol::visibility_closed_form(theta, purity, modulus);
        auto roots = protocol::modulus_from_visibility(v, theta, purity);
        double got = protocol::select_root(roots, protocol::branch_criterion(theta, purity, modulus));
        record(s, std::abs(got - modulus) / modulus,
               "theta=" + num(theta) + " P_m=" + num(purity) + " |A_m|=" + num(modulus));
    }
    return s;
}

SuiteResult check_geometric_phase(std::uint64_t trials, std::uint64_t seed) {
    SuiteResult s{"geometric phase", true, 0, 0.0, 1e-9, {}};
    random::Engine rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        BlochVector i, n, f;
        cplx w;
        for (;;) {
            i = random::unit_vector(rng);
            n = random::unit_vector(rng);
            f = random::unit_vector(rng);
            BlochVector ip = bloch::mirror_image(i, n);
            if (!separated(i, n) || !separated(ip, f) || !separated(f, i)) {
                continue;
            }
            w = values::weak_value(qmath::pauli_along(n), qmath::state_from_bloch(i), qmath::state_from_bloch(f))
                    .value();
            if (std::abs(w) > 1e-3) {
                break;
            }
        }
        double formula = bloch::weak_argument_geometric(i, n, f);
        double loop = -0.5 * bloch::weak_argument_loop(i, n, f).value;
        double direct = std::arg(w);
        double err = std::max({qmath::phase_distance(formula, loop), qmath::phase_distance(formula, direct),
                               qmath::phase_distance(loop, direct)});

        // Triangle against its three quadrangles and the equator term.
        BlochVector a, b, c;
        for (;;) {
            a = random::unit_vector(rng);
            b = random::unit_vector(rng);
            c = random::unit_vector(rng);
            bool poles = std::abs(a.z) > 0.999 || std::abs(b.z) > 0.999 || std::abs(c.z) > 0.999;
            if (!poles && separated(a, b) && separated(b, c) && separated(c, a)) {
                break;
            }
        }
        std::array<BlochVector, 3> tri{a, b, c};
        double omega = bloch::bargmann_solid_angle(std::span<const BlochVector>(tri)).value;
        auto parts = bloch::decompose_triangle(qmath::state_from_bloch(a), qmath::state_from_bloch(b),
                                               qmath::state_from_bloch(c));
        err = std::max(err, bloch::solid_angle_distance(omega, parts.quadrangle_sum() + parts.equator_term));
        record(s, err,
               "i=" + vec(i) + " n=" + vec(n) + " f=" + vec(f) + " a=" + vec(a) + " b=" + vec(b) + " c=" + vec(c));
    }
    return s;
}

SuiteResult check_branch_criterion(std::uint64_t trials, std::uint64_t seed) {
    SuiteResult s{"branch criterion vs no-eraser ratio", true, 0, 0.0, 1e-10, {}};
    random::Engine rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto cfg = random::config(rng);
        double modulus = protocol::effective_modular_value(cfg).modulus();
        double crit = protocol::branch_criterion(cfg.strength(), cfg.purity, modulus);
        double ratio = protocol::no_eraser_ratio(cfg);
        record(s, relative(crit, ratio), describe(cfg));
    }
    return s;
}

SuiteResult check_meter_orientation(std::uint64_t trials, std::uint64_t seed) {
    SuiteResult s{"meter orientation", true, 0, 0.0, 1e-9, {}};
    random::Engine rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto cfg = random::config(rng);
        auto qs = protocol::meter_configs(cfg.meter, cfg.control);
        cplx am = protocol::effective_modular_value(cfg).value();
        double theta = cfg.strength();
        double pc = cfg.purity * std::cos(theta);
        // avg(q_re) = 2 P sin(theta) Re A / D, avg(q_im) = 2 P sin(theta) Im A / D.
        double d = (1.0 + pc) + (1.0 - pc) * std::norm(am);
        double scale = d / (2.0 * cfg.purity * std::sin(theta));
        double re = protocol::bruteforce_conditional(cfg, qs.q_re, 0.0).average * scale;
        double im = protocol::bruteforce_conditional(cfg, qs.q_im, 0.0).average * scale;
        double err = std::abs(cplx(re, im) - am) / std::max(1.0, std::abs(am));
        record(s, err, describe(cfg));
    }
    return s;
}

std::vector<SuiteResult> run_verification(std::uint64_t trials, std::uint64_t seed) {
    return {check_meter_average(trials, seed), check_modulus_round_trip(trials, seed + 1),
            check_geometric_phase(trials, seed + 2), check_branch_criterion(trials, seed + 3),
            check_meter_orientation(trials, seed + 4)};
}

}  // namespace weakpolar::verify
