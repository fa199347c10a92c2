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

// Oracle-equivalence suites behind the `verify` command.

#ifndef WEAKPOLAR_VERIFY_HPP
#define WEAKPOLAR_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "weakpolar/protocol.hpp"

namespace weakpolar::verify {

inline constexpr std::uint64_t kDefaultTrials = 1000;

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::uint64_t trials = 0;
    double max_error = 0.0;
    double tolerance = 0.0;
    /// First failing draw, serialised; empty when the suite passed.
    std::string counterexample;
};

/// Closed-form meter average against the 4x4 brute force, 1e-10.
SuiteResult check_meter_average(std::uint64_t trials, std::uint64_t seed);
/// |A| -> V -> selected root, relative 1e-9, |A| log-uniform on [0.01, 100].
SuiteResult check_modulus_round_trip(std::uint64_t trials, std::uint64_t seed);
/// atan2 form, Bargmann loop and arg of the weak value of n . sigma, 1e-9.
SuiteResult check_geometric_phase(std::uint64_t trials, std::uint64_t seed);
/// Branch criterion against p(-r|f)/p(r|f), 1e-10 relative above 1.
SuiteResult check_branch_criterion(std::uint64_t trials, std::uint64_t seed);
/// Brute-force averages at q_re and q_im recover Re and Im of the effective modular value.
SuiteResult check_meter_orientation(std::uint64_t trials, std::uint64_t seed);

std::vector<SuiteResult> run_verification(std::uint64_t trials, std::uint64_t seed);

std::string describe(const protocol::ProtocolConfig &cfg);

}  // namespace weakpolar::verify

#endif
