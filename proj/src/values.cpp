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

#include "weakpolar/values.hpp"

#include "weakpolar/error.hpp"

namespace weakpolar::values {

namespace {

cplx checked_overlap(const PureState &psi_i, const PureState &psi_f) {
    cplx ov = qmath::overlap(psi_f, psi_i);
    if (std::abs(ov) <= kOrthogonalityGuard) {
        throw Error(ErrorCode::kOrthogonalPostselection, "pre- and post-selected states are orthogonal");
    }
    return ov;
}

}  // namespace

ComplexValue weak_value(const Operator &observable, const PureState &psi_i, const PureState &psi_f) {
    if (observable.dim() != 2 || !observable.is_hermitian()) {
        throw Error(ErrorCode::kInvalidObservable, "weak values need a Hermitian 2x2 observable");
    }
    cplx ov = checked_overlap(psi_i, psi_f);
    return qmath::matrix_element(psi_f, observable, psi_i) / ov;
}

ComplexValue modular_value(const Operator &observable, double g, const PureState &psi_i, const PureState &psi_f) {
    cplx ov = checked_overlap(psi_i, psi_f);
    Operator u = qmath::unitary_exp(observable, g);
    return qmath::matrix_element(psi_f, u, psi_i) / ov;
}

ComplexValue weak_from_modular_firstorder(const ComplexValue &modular, double g) {
    if (g == 0.0) {
        throw Error(ErrorCode::kDivisionUndefined, "coupling strength g must be nonzero");
    }
    return (1.0 - modular.value()) / (qmath::kI * g);
}

ComplexValue sigma_weak_from_modular_exact(const ComplexValue &modular) {
    return qmath::kI * modular.value();
}

}  // namespace weakpolar::values
