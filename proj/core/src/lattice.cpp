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

#include "heatnet/lattice.hpp"

#include <cmath>
#include <random>

#include "heatnet/error.hpp"

namespace heatnet {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Unbiased integer in [0, n); std::uniform_int_distribution is not portable
// across standard libraries, which would break cross-platform reproducibility.
std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    std::uint64_t x;
    do {
        x = gen();
    } while (x < threshold);
    return x % n;
}

void check_spec(const LatticeSpec& spec) {
    if (spec.dim < 1 || spec.dim > 3) fail(ErrorCode::InvalidArgument, "lattice dim must be 1, 2 or 3");
    if (spec.edge < 2) fail(ErrorCode::InvalidArgument, "lattice edge N must be at least 2");
    if (!(spec.mass_mean > 0.0)) fail(ErrorCode::InvalidArgument, "mean mass must be positive");
    if (!(spec.mass_spread >= 0.0) || spec.mass_spread >= spec.mass_mean)
        fail(ErrorCode::InvalidArgument, "mass spread must satisfy 0 <= spread < mean");
    if (!(spec.pinning >= 0.0)) fail(ErrorCode::InvalidArgument, "pinning must be non-negative");
}

}  // namespace

int LatticeSpec::sites() const {
    int k = 1;
    for (int d = 0; d < dim; ++d) k *= edge;
    return k;
}

int LatticeSpec::slab_size() const { return sites() / edge; }

std::uint64_t realization_stream_seed(std::uint64_t seed, std::uint64_t realization_index) {
    return splitmix64(splitmix64(seed) ^ splitmix64(realization_index + 0x632be59bd9b4e019ULL));
}

DisorderRealization draw_masses(const LatticeSpec& spec, std::uint64_t realization_index) {
    check_spec(spec);
    const int k = spec.sites();
    DisorderRealization out;
    out.realization_index = realization_index;
    out.parent_seed = spec.seed;
    out.masses.assign(k, spec.mass_mean - spec.mass_spread);
    for (int i = 0; i < k / 2; ++i) out.masses[i] = spec.mass_mean + spec.mass_spread;

    std::mt19937_64 gen(realization_stream_seed(spec.seed, realization_index));
    for (int i = k - 1; i > 0; --i) {
        const auto j = static_cast<int>(bounded(gen, static_cast<std::uint64_t>(i) + 1));
        std::swap(out.masses[i], out.masses[j]);
    }
    return out;
}

std::pair<HarmonicNetwork, DisorderRealization> build_lattice(const LatticeSpec& spec,
                                                              std::uint64_t realization_index) {
    check_spec(spec);
    const int k = spec.sites();
    const int n = spec.edge;
    DisorderRealization masses = draw_masses(spec, realization_index);

    std::vector<int> stride(spec.dim);
    for (int d = spec.dim - 1, s = 1; d >= 0; --d, s *= n) stride[d] = s;

    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(k, k);
    for (int site = 0; site < k; ++site) {
        int neighbours = 0;
        for (int d = 0; d < spec.dim; ++d) {
            const int x = (site / stride[d]) % n;
            if (x > 0) {
                v(site, site - stride[d]) = -spec.coupling;
                ++neighbours;
            }
            if (x + 1 < n) {
                v(site, site + stride[d]) = -spec.coupling;
                ++neighbours;
            }
        }
        const int bonds = spec.boundary == Boundary::Fixed ? 2 * spec.dim : neighbours;
        v(site, site) = spec.pinning + spec.coupling * bonds;
    }

    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) m(i, i) = masses.masses[i];
    return {HarmonicNetwork(std::move(m), std::move(v)), std::move(masses)};
}

ReservoirSet contacts_for_lattice(const LatticeSpec& spec) {
    check_spec(spec);
    const int slab = spec.slab_size();
    const int k = spec.sites();
    ReservoirSet r;
    r.contacts.resize(2);
    for (int i = 0; i < slab; ++i) {
        r.contacts[0].push_back(i);
        r.contacts[1].push_back(k - slab + i);
    }
    return r;
}

std::vector<int> slab_reversal(const LatticeSpec& spec) {
    check_spec(spec);
    const int slab = spec.slab_size();
    const int k = spec.sites();
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) {
        const int x = i / slab;
        perm[i] = (spec.edge - 1 - x) * slab + i % slab;
    }
    return perm;
}

}  // namespace heatnet
