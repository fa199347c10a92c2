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

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "weakpolar/qmath.hpp"
#include "weakpolar/random_configs.hpp"

namespace {

using namespace weakpolar;
using qmath::BlochVector;
using qmath::cplx;
using qmath::Matrix;
using qmath::Operator;
using qmath::PureState;
using qmath::Role;

const double kS = 1.0 / std::sqrt(2.0);

void expect_matrix(const Operator &op, std::initializer_list<cplx> entries, double tol = 1e-12) {
    int n = op.dim();
    ASSERT_EQ(static_cast<int>(entries.size()), n * n);
    auto it = entries.begin();
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c, ++it) {
            EXPECT_NEAR(std::abs(op(r, c) - *it), 0.0, tol) << "entry " << r << "," << c;
        }
    }
}

TEST(PauliAlong, AxesAndDiagonal) {
    expect_matrix(qmath::pauli_along({0, 0, 1}), {1, 0, 0, -1});
    expect_matrix(qmath::pauli_along({1, 0, 0}), {0, 1, 1, 0});
    expect_matrix(qmath::pauli_along({kS, 0, kS}), {kS, kS, kS, -kS});
}

TEST(PauliAlong, RejectsNonUnit) {
    EXPECT_ERROR_CODE(qmath::pauli_along({1, 1, 0}), ErrorCode::kInvalidDirection);
    EXPECT_ERROR_CODE(qmath::pauli_along({0, 0, 0}), ErrorCode::kInvalidDirection);
}

TEST(PauliAlong, RandomSpectrum) {
    random::Engine rng(1);
    for (int t = 0; t < 1000; ++t) {
        Operator p = qmath::pauli_along(random::unit_vector(rng));
        auto ev = qmath::eigenvalues(p);
        EXPECT_NEAR(ev(0), -1.0, 1e-10);
        EXPECT_NEAR(ev(1), 1.0, 1e-10);
        EXPECT_NEAR(std::abs(p.trace()), 0.0, 1e-10);
        EXPECT_EQ(p.role(), Role::kHermitian);
    }
}

TEST(DensityFromBloch, Examples) {
    expect_matrix(qmath::density_from_bloch({0, 0, 1}, 1.0), {1, 0, 0, 0});
    expect_matrix(qmath::density_from_bloch({kS, kS, 0}, 0.0), {0.5, 0, 0, 0.5});
    expect_matrix(qmath::density_from_bloch({1, 0, 0}, 0.836), {0.5, 0.418, 0.418, 0.5});
}

TEST(DensityFromBloch, RejectsPurityOutsideUnitInterval) {
    EXPECT_ERROR_CODE(qmath::density_from_bloch({0, 0, 1}, 1.5), ErrorCode::kInvalidPurity);
    EXPECT_ERROR_CODE(qmath::density_from_bloch({0, 0, 1}, -0.1), ErrorCode::kInvalidPurity);
}

TEST(DensityFromBloch, RandomSpectrumAndTrace) {
    random::Engine rng(2);
    for (int t = 0; t < 1000; ++t) {
        double p = random::uniform(rng, 0.0, 1.0);
        Operator rho = qmath::density_from_bloch(random::unit_vector(rng), p);
        auto ev = qmath::eigenvalues(rho);
        EXPECT_GE(ev(0), -1e-12);
        EXPECT_LE(ev(1), 1.0 + 1e-12);
        EXPECT_NEAR(ev(0), (1.0 - p) / 2.0, 1e-12);
        EXPECT_NEAR(ev(1), (1.0 + p) / 2.0, 1e-12);
        EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
        EXPECT_TRUE(rho.is_density());
    }
}

TEST(BlochStates, Examples) {
    PureState z = qmath::state_from_bloch({0, 0, 1});
    EXPECT_NEAR(std::abs(z[0] - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(z[1]), 0.0, 1e-12);
    PureState x = qmath::state_from_bloch({1, 0, 0});
    EXPECT_NEAR(std::abs(x[0] - kS), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(x[1] - kS), 0.0, 1e-12);
    PureState y = qmath::state_from_bloch({0, 1, 0});
    EXPECT_NEAR(std::abs(y[0] - kS), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(y[1] - cplx(0, kS)), 0.0, 1e-12);
    PureState south = qmath::state_from_bloch({0, 0, -1});
    EXPECT_NEAR(std::abs(south[1] - 1.0), 0.0, 1e-12);
}

TEST(BlochStates, RoundTrip) {
    random::Engine rng(3);
    for (int t = 0; t < 1000; ++t) {
        BlochVector v = random::unit_vector(rng);
        BlochVector w = qmath::bloch_from_state(qmath::state_from_bloch(v));
        EXPECT_NEAR((v - w).norm(), 0.0, 1e-10);
    }
}

TEST(BlochStates, RejectsNonUnit) {
    EXPECT_ERROR_CODE(qmath::state_from_bloch({0, 0, 2}), ErrorCode::kInvalidDirection);
}

TEST(PureStateTest, NormalizationEnforced) {
    EXPECT_ERROR_CODE(PureState(1.0, 1.0), ErrorCode::kInvalidArgument);
    EXPECT_ERROR_CODE(PureState::normalize(0.0, 0.0), ErrorCode::kInvalidArgument);
    PureState s = PureState::normalize(3.0, cplx(0, 4.0));
    EXPECT_NEAR(std::norm(s[0]) + std::norm(s[1]), 1.0, 1e-15);
}

TEST(PureStateTest, Canonicalization) {
    PureState s = PureState::normalize(cplx(0, -1), 1.0).canonicalized();
    EXPECT_NEAR(s[0].imag(), 0.0, 1e-15);
    EXPECT_GT(s[0].real(), 0.0);
    PureState t = PureState(0.0, cplx(0, 1)).canonicalized();
    EXPECT_NEAR(std::abs(t[1] - 1.0), 0.0, 1e-15);
    EXPECT_TRUE(s.same_ray(s.with_global_phase(1.234)));
    EXPECT_FALSE(PureState::zero().same_ray(PureState::one()));
}

TEST(UnitaryExp, Examples) {
    Operator half_x = Operator::make(0.5 * qmath::pauli_x().matrix(), Role::kHermitian);
    expect_matrix(qmath::unitary_exp(half_x, 0.0), {1, 0, 0, 1});
    expect_matrix(qmath::unitary_exp(half_x, qmath::kPi), {0, cplx(0, -1), cplx(0, -1), 0});
    expect_matrix(qmath::unitary_exp(qmath::pauli_z(), qmath::kPi / 2),
                  {std::polar(1.0, -qmath::kPi / 2), 0, 0, std::polar(1.0, qmath::kPi / 2)});
}

TEST(UnitaryExp, RejectsNonHermitian) {
    Matrix m(2, 2);
    m << 0, 1, 0, 0;
    EXPECT_ERROR_CODE(qmath::unitary_exp(Operator::make(m, Role::kGeneral), 1.0), ErrorCode::kInvalidObservable);
}

TEST(UnitaryExp, InverseAndSeriesOracle) {
    random::Engine rng(4);
    for (int t = 0; t < 1000; ++t) {
        Operator a = random::hermitian(rng);
        double g = random::uniform(rng, -2.0 * qmath::kPi, 2.0 * qmath::kPi);
        Operator u = qmath::unitary_exp(a, g);
        EXPECT_TRUE(u.is_unitary(1e-12));
        EXPECT_LT((u * qmath::unitary_exp(a, -g)).distance(qmath::identity(2)), 1e-10);
        auto ref = oracle::expm(oracle::m2(a), g);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) EXPECT_NEAR(std::abs(u(r, c) - ref[r][c]), 0.0, 1e-9);
    }
}

TEST(Projectors, Examples) {
    expect_matrix(qmath::projector(BlochVector{0, 0, 1}), {1, 0, 0, 0});
    BlochVector r{0.6, 0, 0.8};
    Operator sum = Operator::make(qmath::projector(r).matrix() + qmath::projector(-r).matrix(), Role::kGeneral);
    EXPECT_LT(sum.distance(qmath::identity(2)), 1e-12);
    Operator p = qmath::projector(r);
    EXPECT_LT((p * p).distance(p), 1e-12);
    EXPECT_TRUE(qmath::projector(qmath::state_from_bloch(r)).is_projector());
    EXPECT_LT(qmath::projector(qmath::state_from_bloch(r)).distance(p), 1e-12);
}

TEST(TensorProduct, IdentityAndOrdering) {
    EXPECT_LT(qmath::tensor_product(qmath::identity(2), qmath::identity(2)).distance(qmath::identity(4)), 1e-15);
    // meter (x) probe: |1>|0> sits at index 2
    Operator t = qmath::tensor_product(qmath::projector(PureState::one()), qmath::projector(PureState::zero()));
    EXPECT_NEAR(t(2, 2).real(), 1.0, 1e-15);
    EXPECT_NEAR(t(1, 1).real(), 0.0, 1e-15);
    EXPECT_EQ(t.role(), Role::kProjector);
}

TEST(TensorProduct, ShapeMismatch) {
    EXPECT_ERROR_CODE(qmath::tensor_product(qmath::identity(4), qmath::identity(2)), ErrorCode::kShape);
    EXPECT_ERROR_CODE(qmath::identity(2).distance(qmath::identity(4)), ErrorCode::kShape);
    Matrix m(3, 3);
    m.setIdentity();
    EXPECT_ERROR_CODE(Operator::make(m, Role::kGeneral), ErrorCode::kShape);
}

TEST(OperatorRoles, Validation) {
    Matrix m(2, 2);
    m << 1, 1, 0, 1;
    EXPECT_ERROR_CODE(Operator::make(m, Role::kHermitian), ErrorCode::kInvalidObservable);
    EXPECT_ERROR_CODE(Operator::make(m, Role::kUnitary), ErrorCode::kInvalidObservable);
    EXPECT_ERROR_CODE(Operator::make(m, Role::kProjector), ErrorCode::kInvalidObservable);
    EXPECT_ERROR_CODE(Operator::make(2.0 * qmath::identity(2).matrix(), Role::kDensity),
                      ErrorCode::kInvalidObservable);
    EXPECT_EQ(qmath::pauli_y().adjoint().role(), Role::kHermitian);
}

TEST(Phases, Wrap) {
    EXPECT_DOUBLE_EQ(qmath::wrap_phase(qmath::kPi), qmath::kPi);
    EXPECT_DOUBLE_EQ(qmath::wrap_phase(-qmath::kPi), qmath::kPi);
    EXPECT_NEAR(qmath::wrap_phase(3.0 * qmath::kPi / 2), -qmath::kPi / 2, 1e-15);
    EXPECT_NEAR(qmath::phase_distance(0.1, 2.0 * qmath::kPi - 0.1), 0.2, 1e-14);
}

}  // namespace
