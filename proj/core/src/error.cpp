// Copyright 2026 The heatnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

#include "heatnet/error.hpp"

namespace heatnet {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
        case ErrorCode::ConfigError: return "CONFIG_ERROR";
        case ErrorCode::IoError: return "IO_ERROR";
        case ErrorCode::UnstableNetwork: return "UNSTABLE_NETWORK";
        case ErrorCode::ContactOverlap: return "CONTACT_OVERLAP";
        case ErrorCode::DegeneratePencil: return "DEGENERATE_PENCIL";
        case ErrorCode::UndampedMode: return "UNDAMPED_MODE";
        case ErrorCode::UnmatchedConjugate: return "UNMATCHED_CONJUGATE";
        case ErrorCode::PoleEvaluation: return "POLE_EVALUATION";
        case ErrorCode::DegenerateSpectrum: return "DEGENERATE_SPECTRUM";
        case ErrorCode::DigammaPole: return "DIGAMMA_POLE";
        case ErrorCode::NumericalDegeneracy: return "NUMERICAL_DEGENERACY";
        case ErrorCode::DivergentArgument: return "DIVERGENT_ARGUMENT";
        case ErrorCode::NotSymmetric: return "NOT_SYMMETRIC";
        case ErrorCode::QuadratureFailure: return "QUADRATURE_FAILURE";
        case ErrorCode::FitDomain: return "FIT_DOMAIN";
        case ErrorCode::VerificationFailed: return "VERIFICATION_FAILED";
    }
    return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace heatnet
