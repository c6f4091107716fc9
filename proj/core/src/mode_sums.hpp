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

#include <vector>

#include <Eigen/Dense>

#include "heatnet/spectral.hpp"

namespace heatnet::detail {

/// Rows of `m` at the given sites.
Eigen::MatrixXcd rows_at(const Eigen::MatrixXcd& m, const std::vector<int>& sites);

/// Mode-space matrix of a diagonal projector onto `sites`:
/// cubic L^H P R, quadratic R^T P R.
Eigen::MatrixXcd contact_overlap(const ModeSet& modes, const std::vector<int>& sites);

/// 1 / (omega_a + omega_b); throws NumericalDegeneracy when a sum vanishes.
Eigen::MatrixXcd pair_denominators(const Eigen::VectorXcd& omega);

/// Largest |Im| relative to the largest |Re| of a nominally real result.
double imag_ratio(const Eigen::MatrixXcd& m);

}  // namespace heatnet::detail
