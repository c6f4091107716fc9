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
/// Adaptive Gauss-Kronrod (10/21 point) integration of vector-valued
/// functions over [a, b] or [a, inf).

#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace heatnet {

using VectorIntegrand = std::function<Eigen::VectorXd(double)>;

struct IntegrationOptions {
    double rel_tol = 1e-8;
    /// Component i is converged when err_i <= max(rel_tol |I_i|, floor |group|, 50 eps int|f_i|),
    /// with |group| the largest |I_j| in its group.
    double component_floor = 1e-15;
    double abs_tol = 0.0;
    int max_intervals = 200000;
    /// Consecutive components sharing a scale; empty means one group.
    std::vector<Eigen::Index> group_sizes;
    /// Optional override of the group scales, given the current estimate.
    std::function<std::vector<double>(const Eigen::VectorXd&)> group_scales;
    /// Added to the running estimate before tolerances are formed, for a
    /// piece of a larger integral whose other pieces are already known.
    Eigen::VectorXd reference;
};

struct IntegrationResult {
    Eigen::VectorXd value;
    Eigen::VectorXd error;
    int intervals = 0;
    long evaluations = 0;
    bool converged = false;
};

/// Integrates over the union of [points[k], points[k+1]] and, when
/// `to_infinity`, over [points.back(), inf) through w = c / t.
IntegrationResult integrate(const VectorIntegrand& f, Eigen::Index dimension,
                            std::vector<double> points, bool to_infinity,
                            const IntegrationOptions& options = {});

}  // namespace heatnet
