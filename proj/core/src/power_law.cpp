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

#include "heatnet/power_law.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "heatnet/error.hpp"

namespace heatnet {

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points) {
    std::set<double> distinct;
    for (const auto& [n, j] : points) {
        if (!(n > 0.0)) fail(ErrorCode::FitDomain, "system sizes must be positive");
        if (!(j > 0.0)) fail(ErrorCode::FitDomain, "power-law fit needs positive currents");
        distinct.insert(n);
    }
    if (distinct.size() < 3)
        fail(ErrorCode::InvalidArgument, "power-law fit needs at least three distinct sizes");

    const auto count = static_cast<double>(points.size());
    double mx = 0.0, my = 0.0;
    for (const auto& [n, j] : points) {
        mx += std::log(n);
        my += std::log(j);
    }
    mx /= count;
    my /= count;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [n, j] : points) {
        const double dx = std::log(n) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(j) - my);
    }
    PowerLawFit fit;
    fit.points = points.size();
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.mu_fit = fit.slope == 0.0 ? 0.0 : -fit.slope;
    double ssr = 0.0;
    for (const auto& [n, j] : points) {
        const double r = std::log(j) - (fit.intercept + fit.slope * std::log(n));
        ssr += r * r;
    }
    fit.std_error = points.size() > 2 ? std::sqrt(ssr / (count - 2.0) / sxx) : 0.0;
    return fit;
}

}  // namespace heatnet
