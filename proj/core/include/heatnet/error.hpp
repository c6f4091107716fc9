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

/// @file
/// Error codes and the exception type thrown by every heatnet routine.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace heatnet {

/// Machine-readable failure categories. The CLI maps these onto its exit
/// status and prints the name returned by to_string().
enum class ErrorCode {
    InvalidArgument,
    ConfigError,
    IoError,
    UnstableNetwork,
    ContactOverlap,
    DegeneratePencil,
    UndampedMode,
    UnmatchedConjugate,
    PoleEvaluation,
    DegenerateSpectrum,
    DigammaPole,
    NumericalDegeneracy,
    DivergentArgument,
    NotSymmetric,
    QuadratureFailure,
    FitDomain,
    VerificationFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace heatnet
