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

// Shared fixtures and independent reference computations for the tests.

#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "heatnet/network.hpp"

namespace heatnet::testing {

inline HarmonicNetwork single_oscillator(double m, double v) {
    return HarmonicNetwork(Eigen::MatrixXd::Constant(1, 1, m), Eigen::MatrixXd::Constant(1, 1, v));
}

inline ReservoirSet reservoirs(std::vector<std::vector<int>> contacts, std::vector<double> temps,
                               double gamma0, Cutoff cutoff) {
    ReservoirSet r;
    r.contacts = std::move(contacts);
    r.temperatures = std::move(temps);
    r.gamma0 = gamma0;
    r.cutoff = cutoff;
    return r;
}

/// Uniform pinned chain with fixed ends: diag k0 + 2 k, off-diagonal -k.
inline HarmonicNetwork uniform_chain(int n, double k0 = 10.0, double k = 1.0, double m = 1.0) {
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        v(i, i) = k0 + 2.0 * k;
        if (i + 1 < n) v(i, i + 1) = v(i + 1, i) = -k;
    }
    return HarmonicNetwork(m * Eigen::MatrixXd::Identity(n, n), v);
}

/// Stationary covariance of the memoryless classical Langevin dynamics
///   dx = M^-1 p dt,  dp = (-V x - 2 g0 P_T M^-1 p) dt + dW,  <dW dW^T> = 4 g0 sum_l T_l P_l dt
/// from the Lyapunov equation A S + S A^T + D = 0, solved by Kronecker products.
/// Ordering of S is (x, p).
inline Eigen::MatrixXd classical_lyapunov(const HarmonicNetwork& net, const ReservoirSet& res) {
    const Eigen::Index k = net.size();
    const Eigen::MatrixXd minv = net.mass().inverse();
    const Eigen::MatrixXd pt = res.total_projector(k);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2 * k, 2 * k);
    a.topRightCorner(k, k) = minv;
    a.bottomLeftCorner(k, k) = -net.potential();
    a.bottomRightCorner(k, k) = -2.0 * res.gamma0 * pt * minv;
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2 * k, 2 * k);
    for (std::size_t l = 0; l < res.count(); ++l)
        d.bottomRightCorner(k, k) += 4.0 * res.gamma0 * res.temperatures[l] * res.projector(l, k);

    const Eigen::Index n = 2 * k;
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd op(n * n, n * n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            op.block(i * n, j * n, n, n) = a(i, j) * id + (i == j ? a : Eigen::MatrixXd::Zero(n, n));
    // vec(A S + S A^T) = (A (x) I + I (x) A) vec(S) in row-major vec ordering.
    Eigen::VectorXd rhs(n * n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) rhs(i * n + j) = -d(i, j);
    const Eigen::VectorXd x = op.partialPivLu().solve(rhs);
    Eigen::MatrixXd s(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) s(i, j) = x(i * n + j);
    return 0.5 * (s + s.transpose());
}

/// Power injected by reservoir l in the classical memoryless model.
inline double classical_lyapunov_heat(const HarmonicNetwork& net, const ReservoirSet& res,
                                      const Eigen::MatrixXd& s, std::size_t l) {
    const Eigen::Index k = net.size();
    const Eigen::MatrixXd minv = net.mass().inverse();
    const Eigen::MatrixXd pl = res.projector(l, k);
    const Eigen::MatrixXd vv = minv * s.bottomRightCorner(k, k) * minv;
    return 2.0 * res.gamma0 * (res.temperatures[l] * (pl * minv).trace() - (pl * vv).trace());
}

inline double max_rel(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    const double scale = std::max(b.cwiseAbs().maxCoeff(), 1e-300);
    return (a - b).cwiseAbs().maxCoeff() / scale;
}

}  // namespace heatnet::testing
