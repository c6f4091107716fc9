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
/// Text serialization. Numbers use the shortest representation that
/// round-trips (std::to_chars), so equal results give byte-equal files.

#pragma once

#include <string>

#include "heatnet/experiment.hpp"

namespace heatnet {

std::string format_double(double x);

/// Header `l,l_prime,value`, one row per ordered pair l != l'.
std::string heat_csv(const HeatCurrentMatrix& q);
/// Header `omega,l,l_prime,value`, one row per grid point and ordered pair l != l'.
std::string transmission_csv(const TransmissionSpectrum& t);
/// Header `gamma0,N,realization,J_over_dT`; failed realizations are written as nan.
std::string scaling_csv(const ScalingResult& r);

/// JSON summary documents (two-space indentation, trailing newline).
std::string state_json(const StateResult& r);
std::string heat_json(const HeatResult& r);
std::string scaling_json(const ScalingResult& r);
std::string verify_json(const VerifyResult& r);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace heatnet
