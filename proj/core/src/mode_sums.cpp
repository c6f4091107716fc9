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

#include "mode_sums.hpp"

#include <algorithm>

#include "heatnet/error.hpp"

namespace heatnet::detail {

Eigen::MatrixXcd rows_at(const Eigen::MatrixXcd& m, const std::vector<int>& sites) {
    Eigen::MatrixXcd out(static_cast<Eigen::Index>(sites.size()), m.cols());
    for (std::size_t i = 0; i < sites.size(); ++i)
        out.row(static_cast<Eigen::Index>(i)) = m.row(sites[i]);
    return out;
}

Eigen::MatrixXcd contact_overlap(const ModeSet& modes, const std::vector<int>& sites) {
    const Eigen::MatrixXcd r = rows_at(modes.right, sites);
    if (modes.kind == PencilKind::Cubic) return rows_at(modes.left, sites).adjoint() * r;
    return r.transpose() * r;
}

Eigen::MatrixXcd pair_denominators(const Eigen::VectorXcd& omega) {
    const Eigen::Index n = omega.size();
    const double scale = omega.cwiseAbs().maxCoeff();
    Eigen::MatrixXcd d(n, n);
    for (Eigen::Index b = 0; b < n; ++b)
        for (Eigen::Index a = 0; a < n; ++a) {
            const cdouble sum = omega[a] + omega[b];
            if (!(std::abs(sum) > 1e-13 * scale))
                fail(ErrorCode::NumericalDegeneracy, "pole pair with omega_a + omega_b = 0");
            d(a, b) = 1.0 / sum;
        }
    return d;
}

double imag_ratio(const Eigen::MatrixXcd& m) {
    const double re = m.real().cwiseAbs().maxCoeff();
    const double im = m.imag().cwiseAbs().maxCoeff();
    if (im == 0.0) return 0.0;
    return re > 0.0 ? im / re : im;
}

}  // namespace heatnet::detail
