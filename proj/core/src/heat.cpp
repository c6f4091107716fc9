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

#include "heatnet/heat.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "heatnet/digamma.hpp"
#include "heatnet/error.hpp"
#include "mode_sums.hpp"

namespace heatnet {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;

namespace {

const cdouble kI(0.0, 1.0);

void require_pairwise_ok(const ReservoirSet& reservoirs) {
    std::vector<int> all;
    for (const auto& c : reservoirs.contacts) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        fail(ErrorCode::ContactOverlap, "reservoir contacts overlap");
    if (reservoirs.temperatures.size() != reservoirs.count())
        fail(ErrorCode::InvalidArgument, "one temperature per reservoir is required");
}

HeatCurrentMatrix finish(MatrixXcd q, Regime regime) {
    HeatCurrentMatrix out;
    out.regime = regime;
    out.imag_residue = detail::imag_ratio(q);
    out.pairwise = q.real();
    out.totals = out.pairwise.rowwise().sum();
    return out;
}

}  // namespace

double HeatCurrentMatrix::conservation_error() const {
    const double scale = totals.size() ? totals.cwiseAbs().maxCoeff() : 0.0;
    if (scale == 0.0) return 0.0;
    return std::abs(totals.sum()) / scale;
}

cdouble delta_ll(cdouble omega, double t_l, double t_lp, ThermalModel thermal) {
    if (omega == cdouble(0.0)) fail(ErrorCode::DivergentArgument, "Delta at omega = 0");
    if (t_l == t_lp) return 0.0;
    const cdouble high = kI * (2.0 * (t_l - t_lp)) / omega;
    if (thermal == ThermalModel::Classical) return high;
    return high - (2.0 / std::numbers::pi) *
                      (thermal_digamma(omega, t_l) - thermal_digamma(omega, t_lp));
}

HeatCurrentMatrix heat_finite_cutoff(const ModeSet& modes, const ReservoirSet& reservoirs,
                                     const HeatOptions& options) {
    if (modes.kind != PencilKind::Cubic)
        fail(ErrorCode::InvalidArgument, "finite-cutoff currents need cubic modes");
    require_pairwise_ok(reservoirs);
    const std::size_t nl = reservoirs.count();
    const Index n = modes.mode_count();
    const VectorXcd omega = modes.poles();
    const MatrixXcd den = detail::pair_denominators(omega);
    const double lam = modes.lambda;
    const double pref = std::pow(2.0 * modes.gamma0 * lam * lam, 2);

    std::vector<MatrixXcd> x;
    for (std::size_t l = 0; l < nl; ++l)
        x.push_back(detail::contact_overlap(modes, reservoirs.contacts[l]));

    MatrixXcd q = MatrixXcd::Zero(static_cast<Index>(nl), static_cast<Index>(nl));
    for (std::size_t l = 0; l < nl; ++l)
        for (std::size_t lp = 0; lp < nl; ++lp) {
            if (l == lp) continue;
            const double tl = reservoirs.temperatures[l], tlp = reservoirs.temperatures[lp];
            if (tl == tlp) continue;
            // inner(a) = sum_b X_l(b, a) X_l'(a, b) / (w_a + w_b)
            const VectorXcd inner =
                x[l].transpose().cwiseProduct(x[lp]).cwiseProduct(den).rowwise().sum();
            cdouble acc = 0.0;
            for (Index a = 0; a < n; ++a) {
                if (modes.lambda_pole[a]) continue;
                const cdouble w = omega[a];
                acc += w * w * w * delta_ll(w, tl, tlp, options.thermal) / (w * w + lam * lam) *
                       inner[a];
            }
            q(l, lp) = pref * acc;
        }
    return finish(q, Regime::FiniteCutoff);
}

HeatCurrentMatrix heat_infinite_cutoff(const ModeSet& modes, const ReservoirSet& reservoirs,
                                       const HeatOptions& options) {
    if (modes.kind != PencilKind::Quadratic)
        fail(ErrorCode::InvalidArgument, "infinite-cutoff currents need quadratic modes");
    require_pairwise_ok(reservoirs);
    const std::size_t nl = reservoirs.count();
    const Index n = modes.mode_count();
    const VectorXcd omega = modes.poles();
    const MatrixXcd den = detail::pair_denominators(omega) * omega.asDiagonal();
    const double g = modes.gamma0;

    std::vector<MatrixXcd> z;
    for (std::size_t l = 0; l < nl; ++l)
        z.push_back(detail::contact_overlap(modes, reservoirs.contacts[l]));

    MatrixXcd q = MatrixXcd::Zero(static_cast<Index>(nl), static_cast<Index>(nl));
    for (std::size_t l = 0; l < nl; ++l)
        for (std::size_t lp = 0; lp < nl; ++lp) {
            if (l == lp) continue;
            const double tl = reservoirs.temperatures[l], tlp = reservoirs.temperatures[lp];
            if (tl == tlp) continue;
            // inner(a) = sum_b w_b Z_l(a, b) Z_l'(b, a) / (w_a + w_b)
            const VectorXcd inner =
                z[l].cwiseProduct(z[lp].transpose()).cwiseProduct(den).rowwise().sum();
            cdouble acc = 0.0;
            for (Index a = 0; a < n; ++a) {
                const cdouble w = omega[a];
                acc += delta_ll(w, tl, tlp, options.thermal) * (w * w) * (w * w) * inner[a];
            }
            q(l, lp) = -4.0 * g * g * acc;
        }
    return finish(q, Regime::InfiniteCutoff);
}

HeatCurrentMatrix heat_weak_coupling(const ClosedModes& closed, const ReservoirSet& reservoirs,
                                     const HeatOptions& options) {
    require_pairwise_ok(reservoirs);
    const ClosedModes modes = closed.perturbed ? closed : perturb_modes(closed, reservoirs);
    const std::size_t nl = reservoirs.count();
    const auto lsz = static_cast<Index>(nl);
    const Index k = modes.size();
    const double g = reservoirs.gamma0;

    HeatCurrentMatrix out;
    out.regime = Regime::Weak;
    out.pairwise = MatrixXd::Zero(lsz, lsz);
    for (Index a = 0; a < k; ++a) {
        const Eigen::VectorXd qa = modes.vectors.col(a);
        std::vector<double> weight(nl, 0.0);
        for (std::size_t l = 0; l < nl; ++l)
            for (int i : reservoirs.contacts[l]) weight[l] += qa[i] * qa[i];
        const double total = std::accumulate(weight.begin(), weight.end(), 0.0);
        MatrixXd contrib = MatrixXd::Zero(lsz, lsz);
        const double w = modes.frequencies[a];
        if (total > 0.0) {
            for (std::size_t l = 0; l < nl; ++l)
                for (std::size_t lp = 0; lp < nl; ++lp) {
                    if (l == lp) continue;
                    const double ia = weight[l] * weight[lp] / total;
                    if (ia == 0.0) continue;
                    const cdouble d =
                        delta_ll(w, reservoirs.temperatures[l], reservoirs.temperatures[lp],
                                 options.thermal);
                    contrib(l, lp) = g * ia * (-kI * w * d).real();
                }
        }
        out.pairwise += contrib;
        out.mode_contributions.push_back(std::move(contrib));
    }
    out.totals = out.pairwise.rowwise().sum();
    return out;
}

HeatCurrentMatrix heat_currents(const HarmonicNetwork& network, const ReservoirSet& reservoirs,
                                Regime regime, const HeatOptions& options) {
    switch (regime) {
        case Regime::FiniteCutoff:
            return heat_finite_cutoff(solve_modes(assemble_cubic(network, reservoirs)), reservoirs,
                                      options);
        case Regime::InfiniteCutoff: {
            const ReservoirSet r = reservoirs.with_cutoff(Cutoff::infinite());
            return heat_infinite_cutoff(solve_modes(assemble_quadratic(network, r)), r, options);
        }
        case Regime::Weak:
            require_valid(network, reservoirs);
            return heat_weak_coupling(closed_modes(network), reservoirs, options);
    }
    fail(ErrorCode::InvalidArgument, "unknown regime");
}

SymmetricEstimate heat_symmetric_estimate(const HarmonicNetwork& network,
                                          const ReservoirSet& reservoirs,
                                          std::optional<std::vector<int>> permutation,
                                          double tolerance) {
    require_valid(network, reservoirs);
    if (reservoirs.count() != 2)
        fail(ErrorCode::InvalidArgument, "the symmetric estimate needs exactly two reservoirs");
    const Index k = network.size();
    std::vector<int> perm;
    if (permutation) {
        perm = *permutation;
    } else {
        perm.resize(static_cast<std::size_t>(k));
        for (Index i = 0; i < k; ++i) perm[i] = static_cast<int>(k - 1 - i);
    }
    if (static_cast<Index>(perm.size()) != k)
        fail(ErrorCode::InvalidArgument, "permutation has the wrong length");
    {
        std::vector<int> sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        for (Index i = 0; i < k; ++i)
            if (sorted[i] != i) fail(ErrorCode::InvalidArgument, "not a permutation");
    }
    // S e_i = e_perm(i); S^T X S has entries X(perm(i), perm(j)).
    auto mismatch = [&](const MatrixXd& x, const MatrixXd& y) {
        double d = 0.0;
        for (Index i = 0; i < k; ++i)
            for (Index j = 0; j < k; ++j) d = std::max(d, std::abs(x(i, j) - y(perm[i], perm[j])));
        return d / std::max(1.0, x.cwiseAbs().maxCoeff());
    };
    const MatrixXd pa = reservoirs.projector(0, k), pb = reservoirs.projector(1, k);
    if (mismatch(network.mass(), network.mass()) > tolerance ||
        mismatch(network.potential(), network.potential()) > tolerance ||
        mismatch(pa, pb) > tolerance)
        fail(ErrorCode::NotSymmetric, "network is not mapped onto itself by the permutation");

    SymmetricEstimate out;
    const auto& contact = reservoirs.contacts[0];
    out.contact_size = contact.size();
    double inv = 0.0;
    for (int i : contact) inv += 1.0 / network.mass()(i, i);
    out.mean_inverse_mass = out.contact_size ? inv / static_cast<double>(out.contact_size) : 0.0;
    out.qdot = static_cast<double>(out.contact_size) * reservoirs.gamma0 * out.mean_inverse_mass *
               (reservoirs.temperatures[0] - reservoirs.temperatures[1]);
    out.per_site = out.contact_size ? out.qdot / static_cast<double>(out.contact_size) : 0.0;
    return out;
}

double spectral_density(const ReservoirSet& reservoirs, double omega) {
    double lorentz = 1.0;
    if (!reservoirs.cutoff.is_infinite()) {
        const double lam = reservoirs.cutoff.value();
        lorentz = lam * lam / (omega * omega + lam * lam);
    }
    return 2.0 / std::numbers::pi * reservoirs.gamma0 * omega * lorentz;
}

namespace {

MatrixXd transfer_matrix(const MatrixXcd& g, const HarmonicNetwork& network,
                         const ReservoirSet& reservoirs, double omega) {
    const auto nl = static_cast<Index>(reservoirs.count());
    const double rho = spectral_density(reservoirs, omega);
    MatrixXd out(nl, nl);
    for (Index l = 0; l < nl; ++l)
        for (Index lp = 0; lp < nl; ++lp) {
            const auto& cl = reservoirs.contacts[l];
            const auto& clp = reservoirs.contacts[lp];
            if (l != lp) {
                double acc = 0.0;
                for (int i : cl)
                    for (int j : clp) acc += std::norm(g(i, j));
                out(l, lp) = -std::numbers::pi * rho * rho * acc;
            } else {
                // Im Tr(P_l V_R G I_l G^H)
                const MatrixXcd gc = detail::rows_at(g.transpose(), cl).transpose();  // G P_l columns
                const MatrixXcd vg = network.potential() * gc;                         // V_R G P_l
                cdouble acc = 0.0;
                for (int i : cl) acc += gc.row(i).dot(vg.row(i));  // conj(gc) . vg
                out(l, lp) = rho * acc.imag();
            }
        }
    return out;
}

}  // namespace

TransmissionSpectrum transmission_spectrum(const HarmonicNetwork& network,
                                           const ReservoirSet& reservoirs,
                                           const Eigen::VectorXd& grid) {
    require_pairwise_ok(reservoirs);
    TransmissionSpectrum out;
    out.frequencies = grid;
    for (Index k = 0; k < grid.size(); ++k) {
        const MatrixXcd poly = matrix_polynomial(network, reservoirs, cdouble(0.0, grid[k]));
        Eigen::PartialPivLU<MatrixXcd> lu(poly);
        if (!(lu.rcond() > 1e-15))
            fail(ErrorCode::PoleEvaluation, "frequency grid point lies on a pole");
        out.values.push_back(
            transfer_matrix(green_direct(network, reservoirs, cdouble(0.0, grid[k])), network,
                            reservoirs, grid[k]));
    }
    return out;
}

TransmissionSpectrum transmission_spectrum(const ModeSet& modes, const HarmonicNetwork& network,
                                           const ReservoirSet& reservoirs,
                                           const Eigen::VectorXd& grid) {
    require_pairwise_ok(reservoirs);
    TransmissionSpectrum out;
    out.frequencies = grid;
    for (Index k = 0; k < grid.size(); ++k)
        out.values.push_back(transfer_matrix(green_at(modes, cdouble(0.0, grid[k])), network,
                                             reservoirs, grid[k]));
    return out;
}

double transmission_element(const HarmonicNetwork& network, const ReservoirSet& reservoirs,
                            double omega, std::size_t l, std::size_t lp) {
    if (l == lp)
        fail(ErrorCode::InvalidArgument, "transmission is defined between distinct reservoirs");
    if (l >= reservoirs.count() || lp >= reservoirs.count())
        fail(ErrorCode::InvalidArgument, "reservoir index out of range");
    Eigen::VectorXd grid(1);
    grid << omega;
    return transmission_spectrum(network, reservoirs, grid).values.front()(
        static_cast<Index>(l), static_cast<Index>(lp));
}

}  // namespace heatnet
