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

#include "weakpolar/qmath.hpp"

#include <cmath>
#include <sstream>

#include "weakpolar/error.hpp"

namespace weakpolar::qmath {

namespace {

Matrix pauli_matrix(int axis) {
    Matrix m = Matrix::Zero(2, 2);
    switch (axis) {
        case 0:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case 1:
            m(0, 1) = -kI;
            m(1, 0) = kI;
            break;
        default:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
    }
    return m;
}

std::string describe(const BlochVector &v) {
    std::ostringstream out;
    out.precision(17);
    out << "(" << v.x << ", " << v.y << ", " << v.z << ")";
    return out.str();
}

void require_2x2(const Operator &op, const char *what) {
    if (op.dim() != 2) {
        throw Error(ErrorCode::kShape, std::string(what) + " must be 2x2");
    }
}

}  // namespace

double wrap_phase(double angle) {
    double w = std::remainder(angle, 2.0 * kPi);
    if (w <= -kPi) {
        w += 2.0 * kPi;
    }
    return w;
}

double phase_distance(double a, double b) {
    return std::abs(wrap_phase(a - b));
}

double BlochVector::norm() const {
    return std::sqrt(dot(*this));
}

bool BlochVector::is_unit(double tol) const {
    return std::abs(norm() - 1.0) <= tol;
}

BlochVector BlochVector::normalized() const {
    double n = norm();
    if (n < 1e-14) {
        throw Error(ErrorCode::kInvalidDirection, "cannot normalize zero vector");
    }
    return *this * (1.0 / n);
}

void require_unit(const BlochVector &v, const char *what, double tol) {
    if (!v.is_unit(tol)) {
        throw Error(ErrorCode::kInvalidDirection, std::string(what) + " is not a unit vector: " + describe(v));
    }
}

PureState::PureState(cplx a0, cplx a1, double tol) : amps_(a0, a1) {
    double n2 = std::norm(a0) + std::norm(a1);
    if (!(std::abs(n2 - 1.0) <= tol)) {
        throw Error(ErrorCode::kInvalidArgument, "state amplitudes are not normalized");
    }
}

PureState PureState::normalize(cplx a0, cplx a1) {
    double n = std::sqrt(std::norm(a0) + std::norm(a1));
    if (!(n > 1e-300)) {
        throw Error(ErrorCode::kInvalidArgument, "cannot normalize zero state");
    }
    return PureState(Amplitudes(a0 / n, a1 / n));
}

PureState PureState::canonicalized() const {
    for (int i = 0; i < 2; ++i) {
        double mod = std::abs(amps_(i));
        if (mod > kAmplitudeTol) {
            cplx phase = std::conj(amps_(i)) / mod;
            Amplitudes out = amps_ * phase;
            out(i) = mod;
            return PureState(out);
        }
    }
    return *this;
}

PureState PureState::with_global_phase(double phase) const {
    return PureState(Amplitudes(amps_ * std::polar(1.0, phase)));
}

bool PureState::same_ray(const PureState &other, double tol) const {
    return (canonicalized().amps_ - other.canonicalized().amps_).cwiseAbs().maxCoeff() <= tol;
}

cplx overlap(const PureState &bra, const PureState &ket) {
    return bra.amplitudes().dot(ket.amplitudes());
}

Operator Operator::make(Matrix m, Role role, double tol) {
    if (m.rows() != m.cols() || (m.rows() != 2 && m.rows() != 4)) {
        throw Error(ErrorCode::kShape, "operator must be 2x2 or 4x4");
    }
    Operator op(std::move(m), role);
    bool ok = true;
    const char *name = "";
    switch (role) {
        case Role::kGeneral:
            break;
        case Role::kHermitian:
            ok = op.is_hermitian(tol);
            name = "hermitian";
            break;
        case Role::kUnitary:
            ok = op.is_unitary(tol);
            name = "unitary";
            break;
        case Role::kProjector:
            ok = op.is_projector(tol);
            name = "projector";
            break;
        case Role::kDensity:
            ok = op.is_density(tol);
            name = "density";
            break;
    }
    if (!ok) {
        throw Error(ErrorCode::kInvalidObservable, std::string("matrix is not ") + name);
    }
    return op;
}

bool Operator::is_hermitian(double tol) const {
    return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool Operator::is_unitary(double tol) const {
    Matrix id = Matrix::Identity(m_.rows(), m_.cols());
    return (m_.adjoint() * m_ - id).cwiseAbs().maxCoeff() <= tol;
}

bool Operator::is_projector(double tol) const {
    return is_hermitian(tol) && (m_ * m_ - m_).cwiseAbs().maxCoeff() <= tol;
}

bool Operator::is_density(double tol) const {
    if (!is_hermitian(tol) || std::abs(m_.trace() - 1.0) > tol) {
        return false;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff() >= -std::max(tol, 1e-12);
}

Operator Operator::adjoint() const {
    return Operator(m_.adjoint(), role_);
}

double Operator::distance(const Operator &other) const {
    if (dim() != other.dim()) {
        throw Error(ErrorCode::kShape, "dimension mismatch");
    }
    return (m_ - other.m_).cwiseAbs().maxCoeff();
}

Amplitudes Operator::apply(const PureState &s) const {
    if (dim() != 2) {
        throw Error(ErrorCode::kShape, "apply requires a 2x2 operator");
    }
    return Eigen::Matrix2cd(m_) * s.amplitudes();
}

Operator operator*(const Operator &a, const Operator &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::kShape, "dimension mismatch in product");
    }
    Role role = (a.role() == Role::kUnitary && b.role() == Role::kUnitary) ? Role::kUnitary : Role::kGeneral;
    return Operator::make(a.matrix() * b.matrix(), role, 1e-9);
}

Operator identity(int dim) {
    return Operator::make(Matrix::Identity(dim, dim), Role::kUnitary);
}

Operator pauli_x() {
    return Operator::make(pauli_matrix(0), Role::kHermitian);
}

Operator pauli_y() {
    return Operator::make(pauli_matrix(1), Role::kHermitian);
}

Operator pauli_z() {
    return Operator::make(pauli_matrix(2), Role::kHermitian);
}

Operator pauli_along(const BlochVector &n, double tol) {
    require_unit(n, "pauli axis", tol);
    Matrix m = n.x * pauli_matrix(0) + n.y * pauli_matrix(1) + n.z * pauli_matrix(2);
    return Operator::make(std::move(m), Role::kHermitian);
}

Operator density_from_bloch(const BlochVector &m, double purity, double tol) {
    if (!(purity >= 0.0 && purity <= 1.0)) {
        throw Error(ErrorCode::kInvalidPurity, "purity must lie in [0, 1]");
    }
    require_unit(m, "meter direction", tol);
    Matrix rho = 0.5 * Matrix::Identity(2, 2) +
                 0.5 * purity * (m.x * pauli_matrix(0) + m.y * pauli_matrix(1) + m.z * pauli_matrix(2));
    return Operator::make(std::move(rho), Role::kDensity);
}

Eigen::VectorXd eigenvalues(const Operator &hermitian) {
    if (!hermitian.is_hermitian()) {
        throw Error(ErrorCode::kInvalidObservable, "eigenvalues require a Hermitian operator");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian.matrix(), Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

PureState state_from_bloch(const BlochVector &v, double tol) {
    require_unit(v, "Bloch vector", tol);
    BlochVector u = v.normalized();
    cplx transverse(u.x, u.y);
    // Divide by the larger of the two moduli to stay accurate near both poles.
    if (u.z >= 0.0) {
        double a0 = std::sqrt((1.0 + u.z) / 2.0);
        return PureState::normalize(a0, transverse / (2.0 * a0)).canonicalized();
    }
    double a1 = std::sqrt((1.0 - u.z) / 2.0);
    return PureState::normalize(std::conj(transverse) / (2.0 * a1), a1).canonicalized();
}

BlochVector bloch_from_state(const PureState &s) {
    cplx c = std::conj(s[0]) * s[1];
    return {2.0 * c.real(), 2.0 * c.imag(), std::norm(s[0]) - std::norm(s[1])};
}

Operator unitary_exp(const Operator &observable, double g) {
    require_2x2(observable, "observable");
    if (!observable.is_hermitian()) {
        throw Error(ErrorCode::kInvalidObservable, "exponent generator must be Hermitian");
    }
    const Matrix &a = observable.matrix();
    double a0 = 0.5 * (a(0, 0) + a(1, 1)).real();
    double ax = a(0, 1).real();
    double ay = -a(0, 1).imag();
    double az = 0.5 * (a(0, 0) - a(1, 1)).real();
    double len = std::sqrt(ax * ax + ay * ay + az * az);
    cplx global = std::polar(1.0, -g * a0);
    Matrix u = std::cos(g * len) * Matrix::Identity(2, 2);
    if (len > 0.0) {
        Matrix axis = (ax * pauli_matrix(0) + ay * pauli_matrix(1) + az * pauli_matrix(2)) / len;
        u -= kI * std::sin(g * len) * axis;
    }
    return Operator::make(global * u, Role::kUnitary);
}

Operator projector(const BlochVector &r, double tol) {
    require_unit(r, "projector direction", tol);
    Matrix p = 0.5 * (Matrix::Identity(2, 2) + r.x * pauli_matrix(0) + r.y * pauli_matrix(1) + r.z * pauli_matrix(2));
    return Operator::make(std::move(p), Role::kProjector);
}

Operator projector(const PureState &s) {
    Matrix p = s.amplitudes() * s.amplitudes().adjoint();
    return Operator::make(std::move(p), Role::kProjector);
}

Operator tensor_product(const Operator &meter, const Operator &probe) {
    require_2x2(meter, "meter factor");
    require_2x2(probe, "probe factor");
    Matrix out(4, 4);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block(2 * i, 2 * j, 2, 2) = meter(i, j) * probe.matrix();
        }
    }
    Role role = Role::kGeneral;
    if (meter.role() == probe.role()) {
        role = meter.role();
    } else if (meter.role() != Role::kGeneral && probe.role() != Role::kGeneral) {
        // e.g. projector (x) density stays Hermitian
        bool herm = meter.role() != Role::kUnitary && probe.role() != Role::kUnitary;
        role = herm ? Role::kHermitian : Role::kGeneral;
    }
    return Operator::make(std::move(out), role, 1e-9);
}

cplx matrix_element(const PureState &bra, const Operator &op, const PureState &ket) {
    return bra.amplitudes().dot(op.apply(ket));
}

}  // namespace weakpolar::qmath
