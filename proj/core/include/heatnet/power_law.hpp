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

#pragma once

#include <utility>
#include <vector>

namespace heatnet {

/// Unweighted least squares of log J against log N.
struct PowerLawFit {
    double slope = 0.0;
    double intercept = 0.0;
    double mu_fit = 0.0;      ///< -slope, so that J ~ N^-mu_fit
    double std_error = 0.0;   ///< standard error of the slope
    std::size_t points = 0;
};

/// Needs at least three distinct N; throws FitDomain for J <= 0.
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points);

}  // namespace heatnet
