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

// Fixed-size complex linear algebra for one and two qubits.
//
// Two-qubit operators are always ordered meter (x) probe: the meter is the
// most significant tensor factor, so basis index = 2 * meter + probe.

#ifndef WEAKPOLAR_QMATH_HPP
#define WEAKPOLAR_QMATH_HPP

#include <Eigen/Dense>
#include <complex>
#include <numbers>

namespace weakpolar::qmath {

using cplx = std::complex<double>;

/// Eigen matrix with a fixed 4x4 upper bound; never heap-allocates.
using Matrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, 0, 4, 4>;
using Amplitudes = Eigen::Matrix<cplx, 2, 1>;

inline constexpr double kDefaultTol = 1e-10;
inline constexpr double kDirectionTol = 1e-9;
inline constexpr double kAmplitudeTol = 1e-12;
inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

/// Wraps an angle into (-pi, pi].
double wrap_phase(double angle);

/// Distance between two phases on the circle, in [0, pi].
double phase_distance(double a, double b);

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double dot(const BlochVector &o) const {
        return x * o.x + y * o.y + z * o.z;
    }
    BlochVector cross(const BlochVector &o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const;
    bool is_unit(double tol = kDirectionTol) const;
    /// Throws kInvalidDirection on a (near) zero vector.
    BlochVector normalized() const;

    BlochVector operator+(const BlochVector &o) const {
        return {x + o.x, y + o.y, z + o.z};
    }
    BlochVector operator-(const BlochVector &o) const {
        return {x - o.x, y - o.y, z - o.z};
    }
    BlochVector operator-() const {
        return {-x, -y, -z};
    }
    BlochVector operator*(double s) const {
        return {x * s, y * s, z * s};
    }
    friend BlochVector operator*(double s, const BlochVector &v) {
        return v * s;
    }
};

/// Throws kInvalidDirection unless |v| = 1 within tol.
void require_unit(const BlochVector &v, const char *what, double tol = kDirectionTol);

/// Normalised two-component state vector.
class PureState {
   public:
    /// Validates |a0|^2 + |a1|^2 = 1 within tol.
    PureState(cplx a0, cplx a1, double tol = kAmplitudeTol);

    /// Rescales an arbitrary nonzero pair to unit norm.
    static PureState normalize(cplx a0, cplx a1);

    static PureState zero() {
        return {1.0, 0.0};
    }
    static PureState one() {
        return {0.0, 1.0};
    }

    cplx operator[](int i) const {
        return amps_(i);
    }
    const Amplitudes &amplitudes() const {
        return amps_;
    }

    /// First amplitude with modulus > 1e-12 made real and non-negative.
    PureState canonicalized() const;
    PureState with_global_phase(double phase) const;

    /// Amplitude-wise comparison after canonicalisation of both sides.
    bool same_ray(const PureState &other, double tol = kDefaultTol) const;

   private:
    explicit PureState(Amplitudes amps) : amps_(std::move(amps)) {
    }
    Amplitudes amps_;
};

/// <bra|ket>.
cplx overlap(const PureState &bra, const PureState &ket);

enum class Role { kGeneral, kHermitian, kUnitary, kProjector, kDensity };

/// A 2x2 or 4x4 complex matrix tagged with the structural property it was
/// validated against at construction.
class Operator {
   public:
    /// Validates the role and shape; throws kShape or kInvalidObservable.
    static Operator make(Matrix m, Role role, double tol = kDefaultTol);

    int dim() const {
        return static_cast<int>(m_.rows());
    }
    Role role() const {
        return role_;
    }
    const Matrix &matrix() const {
        return m_;
    }
    cplx operator()(int row, int col) const {
        return m_(row, col);
    }

    bool is_hermitian(double tol = kDefaultTol) const;
    bool is_unitary(double tol = kDefaultTol) const;
    bool is_projector(double tol = kDefaultTol) const;
    bool is_density(double tol = kDefaultTol) const;

    cplx trace() const {
        return m_.trace();
    }
    Operator adjoint() const;

    /// Largest absolute entry difference; throws kShape on dimension mismatch.
    double distance(const Operator &other) const;

    /// Applies a 2x2 operator to a single-qubit state (unnormalised result).
    Amplitudes apply(const PureState &s) const;

   private:
    Operator(Matrix m, Role role) : m_(std::move(m)), role_(role) {
    }
    Matrix m_;
    Role role_;
};

/// Product keeps the unitary tag when both factors are unitary.
Operator operator*(const Operator &a, const Operator &b);

Operator identity(int dim);
Operator pauli_x();
Operator pauli_y();
Operator pauli_z();

/// n . sigma for a unit direction n.
Operator pauli_along(const BlochVector &n, double tol = kDirectionTol);

/// I/2 + (P/2) m . sigma.
Operator density_from_bloch(const BlochVector &m, double purity, double tol = kDirectionTol);

/// Hermitian eigenvalues in ascending order.
Eigen::VectorXd eigenvalues(const Operator &hermitian);

/// Canonicalised pure state with Bloch vector v.
PureState state_from_bloch(const BlochVector &v, double tol = kDirectionTol);
BlochVector bloch_from_state(const PureState &s);

/// exp(-i g A) for a Hermitian 2x2 A, via the Pauli decomposition
/// A = a0 I + a . sigma, exp(-i g A) = e^{-i g a0} (cos(g|a|) I - i sin(g|a|) a^ . sigma).
Operator unitary_exp(const Operator &observable, double g);

/// (I + r . sigma) / 2.
Operator projector(const BlochVector &r, double tol = kDirectionTol);
/// |s><s|.
Operator projector(const PureState &s);

/// meter (x) probe.
Operator tensor_product(const Operator &meter, const Operator &probe);

/// <bra| op |ket> for 2x2 op.
cplx matrix_element(const PureState &bra, const Operator &op, const PureState &ket);

}  // namespace weakpolar::qmath

#endif
