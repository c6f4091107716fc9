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

#include "heatnet/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "heatnet/digamma.hpp"
#include "heatnet/error.hpp"
#include "mode_sums.hpp"

namespace heatnet {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;

std::string to_string(Regime r) {
    switch (r) {
        case Regime::FiniteCutoff: return "finite_cutoff";
        case Regime::InfiniteCutoff: return "infinite_cutoff";
        case Regime::Weak: return "weak";
    }
    return "unknown";
}

std::string to_string(ThermalModel t) {
    return t == ThermalModel::Quantum ? "quantum" : "classical";
}

Eigen::MatrixXd CovarianceBlocks::full() const {
    const Index k = sigma_xx.rows();
    MatrixXd s(2 * k, 2 * k);
    s << sigma_xx, sigma_xp, sigma_xp.transpose(), sigma_pp;
    return s;
}

namespace {

const cdouble kI(0.0, 1.0);

cdouble ipow(int p) {
    static const cdouble table[4] = {1.0, kI, -1.0, -kI};
    return table[((p % 4) + 4) % 4];
}

struct ModeWeights {
    MatrixXcd high;  // mode-space A_H
    MatrixXcd low;   // mode-space A_L(omega_alpha), row alpha
};

// With a reference temperature every bath enters through its excess over the
// reference. The reference part is an equilibrium state, whose sigma_xp vanishes.
ModeWeights mode_weights(const ModeSet& modes, const ReservoirSet& reservoirs, bool with_low,
                         std::optional<double> t_ref = std::nullopt) {
    const Index n = modes.mode_count();
    const VectorXcd omega = modes.poles();
    ModeWeights w;
    w.high = MatrixXcd::Zero(n, n);
    w.low = MatrixXcd::Zero(n, n);
    for (std::size_t l = 0; l < reservoirs.count(); ++l) {
        const MatrixXcd x = detail::contact_overlap(modes, reservoirs.contacts[l]);
        const double t = reservoirs.temperatures[l];
        w.high += (2.0 * (t - t_ref.value_or(0.0))) * x;
        if (!with_low) continue;
        for (Index a = 0; a < n; ++a) {
            cdouble f = omega[a] / (kI * std::numbers::pi) * thermal_digamma(omega[a], t);
            if (t_ref)
                f -= omega[a] / (kI * std::numbers::pi) * thermal_digamma(omega[a], *t_ref);
            w.low.row(a) += f * x.row(a);
        }
    }
    return w;
}

double mid_temperature(const ReservoirSet& reservoirs) {
    const auto [lo, hi] =
        std::minmax_element(reservoirs.temperatures.begin(), reservoirs.temperatures.end());
    return 0.5 * (*lo + *hi);
}

// The classical part of sigma^(1,1) is written as equipartition at the mid
// temperature plus the spectral sum over the excess weights.
MatrixXd equipartition_velocity(const HarmonicNetwork& network, const ReservoirSet& reservoirs) {
    return mid_temperature(reservoirs) * network.mass().inverse();
}

// Velocity-form blocks sigma^(0,0), sigma^(0,1), sigma^(1,1) to physical ones.
CovarianceBlocks export_blocks(const MatrixXd& s00, const MatrixXd& s01, const MatrixXd& s11,
                               const HarmonicNetwork& network) {
    const MatrixXd& m = network.mass();
    CovarianceBlocks out;
    out.sigma_xx = 0.5 * (s00 + s00.transpose());
    out.sigma_xp = s01 * m;
    const MatrixXd pp = m * s11 * m;
    out.sigma_pp = 0.5 * (pp + pp.transpose());
    return out;
}

// Discarded imaginary parts per block, relative to the block magnitudes. The
// velocity blocks can vanish (equilibrium, T = 0), so they are also measured
// against the slowest frequency times |xx|.
double relative_imag(const double (&imag)[3], const MatrixXd& s00, const MatrixXd& s01,
                     const MatrixXd& s11, double w_min) {
    const double a = s00.cwiseAbs().maxCoeff();
    const double c = std::max(s11.cwiseAbs().maxCoeff(), w_min * w_min * a);
    const double b = std::max({s01.cwiseAbs().maxCoeff(), std::sqrt(a * c), w_min * a});
    double r = 0.0;
    const double scale[3] = {a, b, c};
    for (int i = 0; i < 3; ++i)
        if (imag[i] > 0.0) r = std::max(r, scale[i] > 0.0 ? imag[i] / scale[i] : imag[i]);
    return r;
}

double slowest(const ModeSet& modes) {
    double w = std::numeric_limits<double>::infinity();
    for (Eigen::Index a = 0; a < modes.size(); ++a)
        if (!modes.lambda_pole[static_cast<std::size_t>(a)])
            w = std::min(w, std::abs(modes.eigenvalues[a]));
    return std::isfinite(w) ? w : 0.0;
}

bool uses_low(const CovarianceOptions& options) {
    return options.thermal == ThermalModel::Quantum && !options.high_temperature_only;
}

}  // namespace

CovarianceBlocks covariance_finite_cutoff(const ModeSet& modes, const HarmonicNetwork& network,
                                          const ReservoirSet& reservoirs,
                                          const CovarianceOptions& options) {
    if (modes.kind != PencilKind::Cubic)
        fail(ErrorCode::InvalidArgument, "finite-cutoff covariance needs cubic modes");
    const bool low = uses_low(options);
    const VectorXcd omega = modes.poles();
    const MatrixXcd den = detail::pair_denominators(omega);
    const ModeWeights w = mode_weights(modes, reservoirs, low);
    const ModeWeights wx = mode_weights(modes, reservoirs, low, mid_temperature(reservoirs));
    const double pref = 2.0 * modes.gamma0 * modes.lambda * modes.lambda;
    double imag[3] = {0.0, 0.0, 0.0};

    auto block = [&](int n, int m, const MatrixXcd& y) {
        const MatrixXcd c = (omega.array().pow(n + m).matrix().asDiagonal() *
                             y.cwiseProduct(den)) *
                            ipow(n - m + 1);
        return MatrixXcd(pref * (modes.right * c * modes.left.adjoint()));
    };
    auto combine = [&](int n, int m, const ModeWeights& w) {
        MatrixXcd s = block(n, m, w.high);
        if (low) {
            const MatrixXcd sl = block(n, m, w.low);
            s -= sl + ((n + m) % 2 == 0 ? 1.0 : -1.0) * MatrixXcd(sl.transpose());
        }
        imag[n + m] = s.imag().cwiseAbs().maxCoeff();
        return MatrixXd(s.real());
    };

    const ModeWeights wp{wx.high, w.low};
    const MatrixXd s00 = combine(0, 0, w), s01 = combine(0, 1, wx);
    const MatrixXd s11 = combine(1, 1, wp) + equipartition_velocity(network, reservoirs);
    CovarianceBlocks out = export_blocks(s00, s01, s11, network);
    out.regime = Regime::FiniteCutoff;
    out.pp_low_T_valid = true;
    out.imag_residue = relative_imag(imag, s00, s01, s11, slowest(modes));
    return out;
}

CovarianceBlocks covariance_infinite_cutoff(const ModeSet& modes, const HarmonicNetwork& network,
                                            const ReservoirSet& reservoirs,
                                            const CovarianceOptions& options) {
    if (modes.kind != PencilKind::Quadratic)
        fail(ErrorCode::InvalidArgument, "infinite-cutoff covariance needs quadratic modes");
    const bool low = uses_low(options);
    const VectorXcd omega = modes.poles();
    const MatrixXcd den = detail::pair_denominators(omega);
    const ModeWeights w = mode_weights(modes, reservoirs, low);
    const ModeWeights wx = mode_weights(modes, reservoirs, low, mid_temperature(reservoirs));
    const double pref = 2.0 * modes.gamma0;
    double imag[3] = {0.0, 0.0, 0.0};

    auto block = [&](int n, int m, const MatrixXcd& y) {
        const MatrixXcd c = (omega.array().pow(n + m + 1).matrix().asDiagonal() *
                             y.cwiseProduct(den) * omega.asDiagonal()) *
                            ipow(n - m - 1);
        return MatrixXcd(pref * (modes.right * c * modes.right.transpose()));
    };
    auto combine = [&](int n, int m, const ModeWeights& w, bool with_low) {
        MatrixXcd s = block(n, m, w.high);
        if (with_low) {
            const MatrixXcd sl = block(n, m, w.low);
            s -= sl + ((n + m) % 2 == 0 ? 1.0 : -1.0) * MatrixXcd(sl.transpose());
        }
        imag[n + m] = s.imag().cwiseAbs().maxCoeff();
        return MatrixXd(s.real());
    };

    const MatrixXd s00 = combine(0, 0, w, low), s01 = combine(0, 1, wx, low),
                   s11 = combine(1, 1, wx, false) + equipartition_velocity(network, reservoirs);
    CovarianceBlocks out = export_blocks(s00, s01, s11, network);
    out.regime = Regime::InfiniteCutoff;
    out.imag_residue = relative_imag(imag, s00, s01, s11, slowest(modes));
    out.pp_low_T_valid = true;
    if (options.thermal == ThermalModel::Quantum) {
        const double wmax = omega.cwiseAbs().maxCoeff();
        for (double t : reservoirs.temperatures)
            if (t < options.classicality * wmax) out.pp_low_T_valid = false;
    }
    return out;
}

CovarianceBlocks covariance_weak_coupling(const ClosedModes& closed, const HarmonicNetwork& network,
                                          const ReservoirSet& reservoirs) {
    const ClosedModes modes = closed.perturbed ? closed : perturb_modes(closed, reservoirs);
    const Index k = modes.size();
    MatrixXd s00 = MatrixXd::Zero(k, k);
    MatrixXd s11 = MatrixXd::Zero(k, k);
    for (Index a = 0; a < k; ++a) {
        const Eigen::VectorXd q = modes.vectors.col(a);
        double weight = 0.0, weighted_t = 0.0;
        for (std::size_t l = 0; l < reservoirs.count(); ++l) {
            double wl = 0.0;
            for (int i : reservoirs.contacts[l]) wl += q[i] * q[i];
            weight += wl;
            weighted_t += wl * reservoirs.temperatures[l];
        }
        if (!(weight > 0.0) || modes.undamped[a])
            fail(ErrorCode::UndampedMode, "normal mode without contact weight");
        const double t = weighted_t / weight;
        const double w = modes.frequencies[a];
        s00 += (t / (w * w)) * q * q.transpose();
        s11 += t * q * q.transpose();
    }
    CovarianceBlocks out = export_blocks(s00, MatrixXd::Zero(k, k), s11, network);
    out.regime = Regime::Weak;
    return out;
}

CovarianceBlocks stationary_covariance(const HarmonicNetwork& network,
                                       const ReservoirSet& reservoirs, Regime regime,
                                       const CovarianceOptions& options) {
    switch (regime) {
        case Regime::FiniteCutoff:
            return covariance_finite_cutoff(solve_modes(assemble_cubic(network, reservoirs)),
                                            network, reservoirs, options);
        case Regime::InfiniteCutoff: {
            const ReservoirSet r = reservoirs.with_cutoff(Cutoff::infinite());
            return covariance_infinite_cutoff(solve_modes(assemble_quadratic(network, r)), network,
                                              r, options);
        }
        case Regime::Weak:
            require_valid(network, reservoirs);
            return covariance_weak_coupling(closed_modes(network), network, reservoirs);
    }
    fail(ErrorCode::InvalidArgument, "unknown regime");
}

LocalTemperatures local_temperatures(const CovarianceBlocks& cov, const HarmonicNetwork& network) {
    LocalTemperatures out;
    const Index k = network.size();
    out.values.resize(k);
    for (Index i = 0; i < k; ++i) out.values[i] = cov.sigma_pp(i, i) / network.mass()(i, i);
    out.high_t_only = !cov.pp_low_T_valid;
    return out;
}

std::vector<double> heat_from_covariance(const CovarianceBlocks& cov,
                                         const HarmonicNetwork& network,
                                         const ReservoirSet& reservoirs) {
    const ValidationReport rep = validate(network, reservoirs);
    if (!rep.mass_commutes_with_contacts)
        fail(ErrorCode::InvalidArgument, "mass matrix does not commute with the contact projectors");
    // <x v^T> = sigma_xp M^-1
    const MatrixXd xv = network.mass().transpose().ldlt().solve(cov.sigma_xp.transpose()).transpose();
    const MatrixXd vx = network.potential() * xv;
    std::vector<double> out;
    for (std::size_t l = 0; l < reservoirs.count(); ++l) {
        double tr = 0.0;
        for (int i : reservoirs.contacts[l]) tr += vx(i, i);
        out.push_back(tr);
    }
    return out;
}

double uncertainty_margin(const CovarianceBlocks& cov) {
    const Index k = cov.sigma_xx.rows();
    MatrixXcd h = cov.full().cast<cdouble>();
    for (Index i = 0; i < k; ++i) {
        h(i, k + i) += cdouble(0.0, 0.5);
        h(k + i, i) -= cdouble(0.0, 0.5);
    }
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

}  // namespace heatnet
