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
/// Reproducible random stable networks used by the verification corpus.

#pragma once

#include <cstdint>

#include "heatnet/network.hpp"

namespace heatnet {

struct RandomNetworkOptions {
    int min_size = 2;
    int max_size = 6;
    int max_reservoirs = 3;
    double gamma0_min = 1e-3;
    double gamma0_max = 1.0;
    /// Cutoff drawn log-uniformly in [lo, hi] * max Omega.
    double cutoff_min_factor = 10.0;
    double cutoff_max_factor = 1e3;
    double temperature_max = 100.0;
    /// Probability that a reservoir is at exactly zero temperature.
    double zero_temperature_probability = 0.15;
    /// Fixed size instead of a random one when positive.
    int size = 0;
};

struct RandomCase {
    HarmonicNetwork network;
    ReservoirSet reservoirs;   ///< finite cutoff
};

/// Diagonal masses in [0.5, 2], positive-definite V_R, 1 to 3 disjoint
/// contact sets (some sites may stay uncontacted).
RandomCase random_case(std::uint64_t seed, const RandomNetworkOptions& options = {});

}  // namespace heatnet
