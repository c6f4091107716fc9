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

#include <algorithm>
#include <cmath>
#include <vector>

#include "heatnet/error.hpp"
#include "heatnet/spectral.hpp"

namespace heatnet {

using Eigen::Index;
using Eigen::MatrixXd;

ClosedModes closed_modes(const HarmonicNetwork& network) {
    const MatrixXd m = 0.5 * (network.mass() + network.mass().transpose());
    const MatrixXd v = 0.5 * (network.potential() + network.potential().transpose());
    Eigen::GeneralizedSelfAdjointEigenSolver<MatrixXd> es(v, m, Eigen::ComputeEigenvectors |
                                                                     Eigen::Ax_lBx);
    if (es.info() != Eigen::Success)
        fail(ErrorCode::UnstableNetwork, "mass matrix is not positive definite");
    const Eigen::VectorXd w2 = es.eigenvalues();
    if (w2.size() == 0 || !(w2.minCoeff() > 0.0))
        fail(ErrorCode::UnstableNetwork, "potential is not positive definite");

    ClosedModes out;
    out.frequencies = w2.cwiseSqrt();
    out.vectors = es.eigenvectors();
    out.decay_rates = Eigen::VectorXd::Zero(w2.size());
    out.corrections = Eigen::MatrixXcd::Zero(w2.size(), w2.size());
    out.undamped.assign(static_cast<std::size_t>(w2.size()), false);
    return out;
}

ClosedModes perturb_modes(const ClosedModes& closed, const ReservoirSet& reservoirs,
                          const PerturbationOptions& options) {
    const Index k = closed.size();
    const double g = reservoirs.gamma0;
    const std::size_t nl = reservoirs.count();
    ClosedModes out = closed;
    out.gamma0 = g;
    out.perturbed = true;

    std::vector<MatrixXd> proj;
    for (std::size_t l = 0; l < nl; ++l) proj.push_back(reservoirs.projector(l, k));

    // Degenerate clusters: rotate so a generic combination of P_l is diagonal.
    const double wmax = closed.frequencies.maxCoeff();
    std::vector<int> cluster(static_cast<std::size_t>(k), 0);
    int cid = 0;
    for (Index a = 1; a < k; ++a) {
        if (closed.frequencies[a] - closed.frequencies[a - 1] > options.degeneracy * wmax) ++cid;
        cluster[a] = cid;
    }
    for (Index a = 0; a < k;) {
        Index b = a;
        while (b < k && cluster[b] == cluster[a]) ++b;
        const Index size = b - a;
        if (size > 1) {
            const MatrixXd q = out.vectors.middleCols(a, size);
            MatrixXd h = MatrixXd::Zero(size, size);
            for (std::size_t l = 0; l < nl; ++l)
                h += std::sqrt(2.0 + static_cast<double>(l) * 1.3247179572) *
                     (q.transpose() * proj[l] * q);
            Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (h + h.transpose()));
            const MatrixXd rotated = q * es.eigenvectors();
            out.vectors.middleCols(a, size) = rotated;
            for (std::size_t l = 0; l < nl; ++l) {
                MatrixXd blk = rotated.transpose() * proj[l] * rotated;
                const double scale = std::max(1.0, blk.cwiseAbs().maxCoeff());
                blk.diagonal().setZero();
                if (blk.cwiseAbs().maxCoeff() > 1e-8 * scale)
                    fail(ErrorCode::DegenerateSpectrum,
                         "contact projectors cannot be diagonalized together in a degenerate "
                         "mode subspace");
            }
        }
        a = b;
    }

    const MatrixXd pt = reservoirs.total_projector(k);
    const MatrixXd coupling = out.vectors.transpose() * pt * out.vectors;
    const double wmax_coupling = coupling.diagonal().cwiseAbs().maxCoeff();
    out.decay_rates = g * coupling.diagonal();
    out.corrections = Eigen::MatrixXcd::Zero(k, k);
    out.max_mixing = 0.0;
    for (Index a = 0; a < k; ++a) {
        out.undamped[a] = !(coupling(a, a) > 1e-12 * wmax_coupling);
        if (out.undamped[a]) out.decay_rates[a] = 0.0;
        const double wa = out.frequencies[a];
        Eigen::VectorXcd corr = Eigen::VectorXcd::Zero(k);
        for (Index b = 0; b < k; ++b) {
            if (cluster[b] == cluster[a]) continue;
            const double wb = out.frequencies[b];
            const double factor = wa * coupling(b, a) / (wb * wb - wa * wa);
            out.max_mixing = std::max(out.max_mixing, 2.0 * g * std::abs(factor));
            corr += cdouble(0.0, -2.0 * g * factor) * out.vectors.col(b).cast<cdouble>();
        }
        out.corrections.col(a) = corr;
    }
    if (out.max_mixing > options.max_mixing)
        fail(ErrorCode::DegenerateSpectrum,
             "first-order mode mixing exceeds the allowed bound; the weak-coupling expansion "
             "does not apply");
    return out;
}

}  // namespace heatnet
