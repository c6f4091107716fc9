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
/// Pinned hypercubic crystals with binary mass disorder.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "heatnet/network.hpp"

namespace heatnet {

enum class Boundary { Free, Fixed };

struct LatticeSpec {
    int dim = 1;
    int edge = 2;            ///< N, sites per edge
    double pinning = 10.0;   ///< k0
    double coupling = 1.0;   ///< nearest-neighbour spring constant
    double mass_mean = 1.0;
    double mass_spread = 0.0;
    std::uint64_t seed = 0;
    Boundary boundary = Boundary::Fixed;

    int sites() const;
    int slab_size() const;   ///< N^(dim-1)
};

struct DisorderRealization {
    std::vector<double> masses;
    std::uint64_t realization_index = 0;
    std::uint64_t parent_seed = 0;
};

/// Seed of the private random stream used for one realization. Depends only
/// on (seed, realization_index) so ensembles can be built in any order.
std::uint64_t realization_stream_seed(std::uint64_t seed, std::uint64_t realization_index);

/// Shuffled binary masses: floor(K/2) sites get mean+spread, the rest mean-spread.
DisorderRealization draw_masses(const LatticeSpec& spec, std::uint64_t realization_index);

/// Sites are ordered slab-major: index = x0 * N^(dim-1) + transverse index,
/// so the potential is block tridiagonal with -1 inter-slab blocks.
std::pair<HarmonicNetwork, DisorderRealization> build_lattice(const LatticeSpec& spec,
                                                              std::uint64_t realization_index);

/// Two reservoirs on the first and last slab. Temperatures, gamma0 and cutoff
/// are left for the caller to fill in.
ReservoirSet contacts_for_lattice(const LatticeSpec& spec);

/// Permutation x0 -> N-1-x0 that exchanges the two contact slabs.
std::vector<int> slab_reversal(const LatticeSpec& spec);

}  // namespace heatnet
