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

// Definition-level weak and modular values.

#ifndef WEAKPOLAR_VALUES_HPP
#define WEAKPOLAR_VALUES_HPP

#include "weakpolar/qmath.hpp"

namespace weakpolar::values {

using qmath::cplx;
using qmath::Operator;
using qmath::PureState;

inline constexpr double kOrthogonalityGuard = 1e-12;

/// A complex number carried together with its polar form; the argument lies
/// in (-pi, pi] and is 0 for the zero value.
class ComplexValue {
   public:
    ComplexValue() = default;
    ComplexValue(cplx z) : z_(z) {  // NOLINT(google-explicit-constructor)
    }
    static ComplexValue polar(double modulus, double argument) {
        return ComplexValue(std::polar(modulus, argument));
    }

    cplx value() const {
        return z_;
    }
    double re() const {
        return z_.real();
    }
    double im() const {
        return z_.imag();
    }
    double modulus() const {
        return std::abs(z_);
    }
    double argument() const {
        return qmath::wrap_phase(std::arg(z_));
    }

   private:
    cplx z_{0.0, 0.0};
};

/// <f|A|i> / <f|i>.
ComplexValue weak_value(const Operator &observable, const PureState &psi_i, const PureState &psi_f);

/// <f|exp(-i g A)|i> / <f|i>.
ComplexValue modular_value(const Operator &observable, double g, const PureState &psi_i, const PureState &psi_f);

/// (1 - A_m) / (i g), the first-order inversion of A_m = 1 - i g A_w + O(g^2).
ComplexValue weak_from_modular_firstorder(const ComplexValue &modular, double g);

/// i A_m. Exact when A_m was built with A = sigma_n / 2 and g = pi, where
/// exp(-i pi sigma_n / 2) = -i sigma_n.
ComplexValue sigma_weak_from_modular_exact(const ComplexValue &modular);

}  // namespace weakpolar::values

#endif
