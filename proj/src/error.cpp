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

#include "weakpolar/error.hpp"

namespace weakpolar {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kInvalidDirection:
            return "invalid-direction";
        case ErrorCode::kInvalidPurity:
            return "invalid-purity";
        case ErrorCode::kInvalidObservable:
            return "invalid-observable";
        case ErrorCode::kShape:
            return "shape";
        case ErrorCode::kOrthogonalPostselection:
            return "orthogonal post-selection";
        case ErrorCode::kUndefinedConnection:
            return "undefined-connection";
        case ErrorCode::kDegenerateLoop:
            return "degenerate-loop";
        case ErrorCode::kAmbiguousLift:
            return "ambiguous-lift";
        case ErrorCode::kUndefinedArgument:
            return "undefined-argument";
        case ErrorCode::kDivisionUndefined:
            return "division-undefined";
        case ErrorCode::kCollinearConfiguration:
            return "collinear-configuration";
        case ErrorCode::kEraserCondition:
            return "eraser-condition";
        case ErrorCode::kNoPostselection:
            return "no-postselection";
        case ErrorCode::kDegenerateStrength:
            return "degenerate-strength";
        case ErrorCode::kSingularCoefficient:
            return "singular-coefficient";
        case ErrorCode::kInconsistentVisibility:
            return "inconsistent-visibility";
        case ErrorCode::kModelViolation:
            return "model-violation";
        case ErrorCode::kInvalidProbability:
            return "invalid-probability";
        case ErrorCode::kNoFringe:
            return "no-fringe";
        case ErrorCode::kInvalidArgument:
            return "invalid-argument";
        case ErrorCode::kIo:
            return "io";
    }
    return "unknown";
}

}  // namespace weakpolar
