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

// Test-only reference implementations. Nothing here calls the library's
// closed forms or its Eigen-backed operators.

#ifndef WEAKPOLAR_TESTS_ORACLES_HPP
#define WEAKPOLAR_TESTS_ORACLES_HPP

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "weakpolar/error.hpp"
#include "weakpolar/protocol.hpp"
#include "weakpolar/qmath.hpp"

#define EXPECT_ERROR_CODE(stmt, expected)                                            \
    do {                                                                             \
        try {                                                                        \
            stmt;                                                                    \
            ADD_FAILURE() << "no exception from " #stmt;                             \
        } catch (const weakpolar::Error &e) {                                        \
            EXPECT_EQ(e.code(), expected) << e.what();                               \
        }                                                                            \
    } while (0)

namespace oracle {

using cplx = std::complex<double>;
using weakpolar::qmath::BlochVector;
using M2 = std::array<std::array<cplx, 2>, 2>;
using M4 = std::array<std::array<cplx, 4>, 4>;
using V2 = std::array<cplx, 2>;

inline constexpr double kPi = 3.14159265358979323846;

// Signed solid angle of a geodesic triangle (Van Oosterom and Strackee).
inline double triangle_solid_angle(const BlochVector &a, const BlochVector &b, const BlochVector &c) {
    double num = a.dot(b.cross(c));
    double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
    return 2.0 * std::atan2(num, den);
}

// Fan triangulation from the first vertex.
inline double polygon_solid_angle(const std::vector<BlochVector> &loop) {
    double total = 0.0;
    for (std::size_t k = 1; k + 1 < loop.size(); ++k) {
        total += triangle_solid_angle(loop[0], loop[k], loop[k + 1]);
    }
    return total;
}

inline double wrap(double x, double period) {
    return std::remainder(x, period);
}

inline V2 amps(const weakpolar::qmath::PureState &s) {
    return {s[0], s[1]};
}

inline M2 m2(const weakpolar::qmath::Operator &op) {
    return {{{op(0, 0), op(0, 1)}, {op(1, 0), op(1, 1)}}};
}

inline M2 mul(const M2 &a, const M2 &b) {
    M2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline V2 apply(const M2 &a, const V2 &v) {
    return {a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1]};
}

inline cplx braket(const V2 &bra, const V2 &ket) {
    return std::conj(bra[0]) * ket[0] + std::conj(bra[1]) * ket[1];
}

// <f|A|i> / <f|i> by hand.
inline cplx weak_value(const M2 &a, const V2 &i, const V2 &f) {
    return braket(f, apply(a, i)) / braket(f, i);
}

// exp(-i g A) by scaling and squaring a Taylor series.
inline M2 expm(const M2 &a, double g) {
    M2 x{};
    int squarings = 10;
    double scale = std::ldexp(1.0, -squarings);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) x[i][j] = cplx(0.0, -g * scale) * a[i][j];
    M2 sum{{{1.0, 0.0}, {0.0, 1.0}}};
    M2 term = sum;
    for (int n = 1; n < 30; ++n) {
        term = mul(term, x);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                term[i][j] /= static_cast<double>(n);
                sum[i][j] += term[i][j];
            }
    }
    for (int s = 0; s < squarings; ++s) sum = mul(sum, sum);
    return sum;
}

inline M2 bloch_matrix(const BlochVector &v, double length) {
    // (I + length v . sigma) / 2
    return {{{0.5 * (1.0 + length * v.z), 0.5 * length * cplx(v.x, -v.y)},
             {0.5 * length * cplx(v.x, v.y), 0.5 * (1.0 - length * v.z)}}};
}

inline M4 kron(const M2 &a, const M2 &b) {
    M4 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) c[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
    return c;
}

inline M4 mul(const M4 &a, const M4 &b) {
    M4 c{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline M4 dagger(const M4 &a) {
    M4 c{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) c[i][j] = std::conj(a[j][i]);
    return c;
}

inline cplx trace(const M4 &a) {
    return a[0][0] + a[1][1] + a[2][2] + a[3][3];
}

struct Joint {
    double p_q = 0.0;
    double p_negq = 0.0;
    double average() const {
        return (p_q - p_negq) / (p_q + p_negq);
    }
};

// Joint probabilities of meter +-q and probe f after the gate, plate setting xi
// applied as exp(i xi) on the -r branch.
inline Joint joint(const weakpolar::protocol::ProtocolConfig &cfg, const BlochVector &q, double xi = 0.0) {
    M2 rho_m = bloch_matrix(cfg.meter, cfg.purity);
    V2 i = amps(cfg.pre), f = amps(cfg.post);
    M2 rho_p{{{i[0] * std::conj(i[0]), i[0] * std::conj(i[1])}, {i[1] * std::conj(i[0]), i[1] * std::conj(i[1])}}};
    M2 pf{{{f[0] * std::conj(f[0]), f[0] * std::conj(f[1])}, {f[1] * std::conj(f[0]), f[1] * std::conj(f[1])}}};
    M2 pr = bloch_matrix(cfg.control, 1.0);
    M2 pnr = bloch_matrix(-cfg.control, 1.0);
    M2 id{{{1.0, 0.0}, {0.0, 1.0}}};
    M2 ua = expm(m2(cfg.observable), cfg.coupling);
    M4 a = kron(pr, id), b = kron(pnr, ua);
    cplx phase = std::polar(1.0, cfg.gate_phase);
    M4 u{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) u[r][c] = a[r][c] + phase * b[r][c];
    M4 plate{};
    M4 pa = kron(pr, id), pb = kron(pnr, id);
    cplx ph = std::polar(1.0, -xi);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) plate[r][c] = pa[r][c] + ph * pb[r][c];
    M4 total = mul(plate, u);
    M4 rho = mul(mul(total, kron(rho_m, rho_p)), dagger(total));
    Joint out;
    out.p_q = trace(mul(kron(bloch_matrix(q, 1.0), pf), rho)).real();
    out.p_negq = trace(mul(kron(bloch_matrix(-q, 1.0), pf), rho)).real();
    return out;
}

template <class F>
double central_difference(F f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace oracle

#endif
