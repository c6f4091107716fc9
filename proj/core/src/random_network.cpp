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

#include "heatnet/random_network.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "heatnet/spectral.hpp"

namespace heatnet {

RandomCase random_case(std::uint64_t seed, const RandomNetworkOptions& options) {
    std::mt19937_64 rng(seed ^ 0x6a09e667f3bcc909ULL);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> normal(0.0, 1.0);
    auto uniform_int = [&](int lo, int hi) {
        return lo + static_cast<int>(std::floor(unit(rng) * (hi - lo + 1)));
    };

    const int k = options.size > 0 ? options.size : uniform_int(options.min_size, options.max_size);
    Eigen::MatrixXd mass = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) mass(i, i) = 0.5 + 1.5 * unit(rng);
    Eigen::MatrixXd a(k, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) a(i, j) = normal(rng);
    Eigen::MatrixXd v = a * a.transpose() / static_cast<double>(k);
    v += (0.5 + 1.5 * unit(rng)) * Eigen::MatrixXd::Identity(k, k);
    v = 0.5 * (v + v.transpose());

    RandomCase out{HarmonicNetwork(mass, v), {}};
    const int nl = std::min(k, uniform_int(1, options.max_reservoirs));
    std::vector<int> sites(static_cast<std::size_t>(k));
    std::iota(sites.begin(), sites.end(), 0);
    for (int i = k - 1; i > 0; --i) std::swap(sites[i], sites[uniform_int(0, i)]);
    const int contacted = uniform_int(nl, k);
    // Split the first `contacted` shuffled sites into nl non-empty groups.
    std::vector<int> cuts;
    for (int i = 1; i < contacted; ++i) cuts.push_back(i);
    for (int i = static_cast<int>(cuts.size()) - 1; i > 0; --i)
        std::swap(cuts[i], cuts[uniform_int(0, i)]);
    cuts.resize(static_cast<std::size_t>(nl - 1));
    std::sort(cuts.begin(), cuts.end());
    cuts.insert(cuts.begin(), 0);
    cuts.push_back(contacted);
    for (int l = 0; l < nl; ++l) {
        std::vector<int> c(sites.begin() + cuts[l], sites.begin() + cuts[l + 1]);
        std::sort(c.begin(), c.end());
        out.reservoirs.contacts.push_back(c);
        const bool zero = unit(rng) < options.zero_temperature_probability;
        const double t = options.temperature_max * unit(rng);
        out.reservoirs.temperatures.push_back(zero ? 0.0 : t);
    }
    const double lg = std::log(options.gamma0_min), hg = std::log(options.gamma0_max);
    out.reservoirs.gamma0 = std::exp(lg + (hg - lg) * unit(rng));
    const double wmax = closed_modes(out.network).frequencies.maxCoeff();
    const double lc = std::log(options.cutoff_min_factor), hc = std::log(options.cutoff_max_factor);
    out.reservoirs.cutoff = Cutoff::finite(wmax * std::exp(lc + (hc - lc) * unit(rng)));
    return out;
}

}  // namespace heatnet
