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

// Bloch-sphere geometry behind the argument of a Pauli weak value.
//
// Solid angles are oriented: positive when the loop runs counterclockwise seen
// from outside the sphere. They are computed from Bargmann invariants,
//   Omega = -2 arg(<s1|sk><sk|s(k-1)>...<s2|s1>),
// which is gauge invariant, so any phase convention for the states works.

#ifndef WEAKPOLAR_BLOCH_HPP
#define WEAKPOLAR_BLOCH_HPP

#include <span>
#include <vector>

#include "weakpolar/qmath.hpp"

namespace weakpolar::bloch {

using qmath::BlochVector;
using qmath::PureState;

inline constexpr double kOverlapGuard = 1e-12;

/// Half-angle spherical coordinates: 2*eta is the azimuth and 2*chi the
/// elevation above the equator, a = (cos2eta cos2chi, sin2eta cos2chi, sin2chi).
struct SphericalCoord {
    double eta = 0.0;
    double chi = 0.0;
};

BlochVector to_bloch(const SphericalCoord &c);
/// Inverse of to_bloch with eta in (-pi/2, pi/2], chi in [-pi/4, pi/4].
SphericalCoord from_bloch(const BlochVector &v);

/// The polarisation-gauge state R(eta) (cos chi, i sin chi), expressed in the
/// qubit basis so that its Bloch vector is to_bloch(c). Equator states of this
/// gauge are in phase with each other along a common azimuth.
PureState spherical_state(const SphericalCoord &c);

enum class Orientation { kCounterClockwise, kClockwise, kDegenerate };

struct SolidAngle {
    double value = 0.0;  // steradians
    Orientation orientation = Orientation::kDegenerate;

    static SolidAngle from_value(double value);
};

/// 2 (n.i) n - i: reflection of i about the n axis.
BlochVector mirror_image(const BlochVector &i, const BlochVector &n);

/// arg<b|a> in (-pi, pi]. Throws kUndefinedConnection for orthogonal states.
double pancharatnam_connection(const PureState &a, const PureState &b);

/// Closed form of arg<b|a> for spherical_state(a), spherical_state(b):
/// atan2(-sin(eta_a - eta_b) sin(chi_a + chi_b), cos(eta_a - eta_b) cos(chi_a - chi_b)).
double connection_closed_form(const SphericalCoord &a, const SphericalCoord &b);

/// Oriented solid angle of the geodesic polygon through the loop (>= 3 states).
/// Throws kDegenerateLoop naming the first edge whose overlap is below the guard.
SolidAngle bargmann_solid_angle(std::span<const PureState> loop);
SolidAngle bargmann_solid_angle(std::span<const BlochVector> loop);

/// Equator lift (same azimuth, chi = 0). Throws kAmbiguousLift at the poles.
BlochVector equator_lift(const BlochVector &v);

struct TriangleDecomposition {
    SolidAngle ab;  // Omega_{a b b_e a_e}
    SolidAngle bc;  // Omega_{b c c_e b_e}
    SolidAngle ca;  // Omega_{c a a_e c_e}
    /// Solid angle of the lifted triangle a_e b_e c_e: 0 when the lifts sit in an
    /// open half of the equator, 2pi (a hemisphere) when they wrap around it.
    double equator_term = 0.0;

    double quadrangle_sum() const {
        return ab.value + bc.value + ca.value;
    }
};

/// Splits Omega_abc into three quadrangles through the equator, so that
/// Omega_abc = ab + bc + ca + equator_term (mod 4pi).
TriangleDecomposition decompose_triangle(const PureState &a, const PureState &b, const PureState &c);

/// arg of the weak value of sigma_n from Bloch vectors alone:
/// atan2((n x i).f, n.i + n.f), in (-pi, pi].
double weak_argument_geometric(const BlochVector &i, const BlochVector &n, const BlochVector &f);

/// Omega_{i n i' f} through the Bargmann route, i' = mirror_image(i, n).
SolidAngle weak_argument_loop(const BlochVector &i, const BlochVector &n, const BlochVector &f);

/// Difference of two solid angles reduced to (-2pi, 2pi].
double solid_angle_distance(double a, double b);

}  // namespace weakpolar::bloch

#endif
