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

#include <Eigen/Dense>

namespace heatnet::detail {

/// Columns of `right` are unit vectors with A v = lambda B v.
struct DenseEigen {
    Eigen::VectorXcd values;
    Eigen::MatrixXcd right;
};

/// Eigenpairs of the real pencil (A, B) with B invertible, from the balanced
/// matrix B^-1 A. With `extended` the reduction runs in long double and the
/// result is rounded to double. Complex pairs come out as adjacent conjugates.
DenseEigen eig_pencil(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, bool extended);

}  // namespace heatnet::detail
