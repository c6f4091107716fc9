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

#include "heatnet/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "heatnet/error.hpp"
#include "heatnet/output.hpp"
#include "heatnet/spectral.hpp"

namespace heatnet {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

double thermal_weight(double omega, double temperature, ThermalModel thermal) {
    if (thermal == ThermalModel::Classical) return 2.0 * temperature;
    if (temperature == 0.0) return std::abs(omega);
    const double x = omega / (2.0 * temperature);
    if (std::abs(x) < 1e-5) return 2.0 * temperature * (1.0 + x * x / 3.0);
    return omega / std::tanh(x);
}

std::vector<double> oracle_breakpoints(const HarmonicNetwork& network,
                                       const ReservoirSet& reservoirs,
                                       const QuadratureConfig& config, double* omega_max) {
    std::vector<cdouble> poles;
    try {
        const ModeSet modes = solve_modes(network, reservoirs);
        const Eigen::VectorXcd w = modes.poles();
        poles.assign(w.data(), w.data() + w.size());
    } catch (const Error&) {
        const ClosedModes closed = closed_modes(network);
        for (Index a = 0; a < closed.size(); ++a) poles.emplace_back(closed.frequencies[a], 0.0);
    }
    double scale = 0.0;
    for (const auto& p : poles) scale = std::max(scale, std::abs(p));
    if (!reservoirs.cutoff.is_infinite()) scale = std::max(scale, reservoirs.cutoff.value());
    const double wmax = config.omega_max_multiplier * scale;

    std::vector<double> pts{0.0, wmax};
    auto add = [&](double x) {
        if (x > 0.0 && x < wmax) pts.push_back(x);
    };
    for (const auto& p : poles) {
        const double x = std::abs(p.real()), y = std::abs(p.imag());
        for (double k : config.resonance_offsets) {
            add(x + k * y);
            add(x - k * y);
        }
    }
    for (double t : reservoirs.temperatures)
        if (t > 0.0)
            for (double f : {0.1, 1.0, 2.0 * std::numbers::pi, 20.0 * std::numbers::pi}) add(f * t);
    if (!reservoirs.cutoff.is_infinite())
        for (double f : {0.1, 1.0, 10.0}) add(f * reservoirs.cutoff.value());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [&](double a, double b) { return std::abs(a - b) <= 1e-14 * wmax; }),
              pts.end());
    if (omega_max) *omega_max = wmax;
    return pts;
}

namespace {

MatrixXcd columns_at(const MatrixXcd& g, const std::vector<int>& sites) {
    MatrixXcd out(g.rows(), static_cast<Index>(sites.size()));
    for (std::size_t j = 0; j < sites.size(); ++j) out.col(static_cast<Index>(j)) = g.col(sites[j]);
    return out;
}

double lorentz(const ReservoirSet& reservoirs, double w) {
    if (reservoirs.cutoff.is_infinite()) return 1.0;
    const double lam = reservoirs.cutoff.value();
    return lam * lam / (w * w + lam * lam);
}

struct Split {
    IntegrationResult body, tail;
    VectorXd value() const { return body.value + tail.value; }
    VectorXd error() const { return body.error + tail.error; }
};

using ScaleFn = std::function<std::vector<double>(const VectorXd&)>;

Split integrate_split(const VectorIntegrand& f, Index dim, const std::vector<double>& pts,
                      const QuadratureConfig& config, std::vector<Index> groups,
                      ScaleFn scales = {}) {
    IntegrationOptions opt;
    opt.rel_tol = config.rel_tol;
    opt.component_floor = config.component_floor;
    opt.abs_tol = config.abs_tol;
    opt.max_intervals = config.max_subdivisions;
    opt.group_scales = scales;
    opt.group_sizes = std::move(groups);
    Split s;
    // Both pieces are judged against the scale of the whole integral.
    s.body = integrate(f, dim, pts, false, opt);
    opt.reference = s.body.value;
    s.tail = integrate(f, dim, {pts.back()}, true, opt);
    return s;
}

QuadratureDiagnostics diagnose(const Split& s, double wmax, const std::vector<Index>& groups,
                               const ScaleFn& scales = {}) {
    QuadratureDiagnostics d;
    d.omega_max = wmax;
    d.tail_magnitude = s.tail.value.size() ? s.tail.value.cwiseAbs().maxCoeff() : 0.0;
    d.intervals = s.body.intervals + s.tail.intervals;
    d.evaluations = s.body.evaluations + s.tail.evaluations;
    d.converged = s.body.converged && s.tail.converged;
    const VectorXd v = s.value(), e = s.error();
    Index start = 0;
    const std::vector<double> sc = scales ? scales(v) : std::vector<double>{};
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        const Index g = groups[gi];
        const double scale =
            gi < sc.size() ? sc[gi] : (g ? v.segment(start, g).cwiseAbs().maxCoeff() : 0.0);
        if (scale > 0.0)
            d.error_estimate = std::max(d.error_estimate, e.segment(start, g).maxCoeff() / scale);
        start += g;
    }
    return d;
}

void require_converged(const QuadratureDiagnostics& d, const char* what) {
    if (!d.converged) {
        std::ostringstream os;
        os << what << " quadrature did not converge: " << d.intervals << " intervals, "
           << d.evaluations << " evaluations, error estimate " << format_double(d.error_estimate);
        fail(ErrorCode::QuadratureFailure, os.str());
    }
}

}  // namespace

OracleCovariance quadrature_covariance(const HarmonicNetwork& network,
                                       const ReservoirSet& reservoirs,
                                       const QuadratureConfig& config) {
    require_valid(network, reservoirs);
    const Index k = network.size();
    const Index kk = k * k;
    const bool infinite = reservoirs.cutoff.is_infinite();
    const double g0 = reservoirs.gamma0;

    auto integrand = [&](double w) -> VectorXd {
        const MatrixXcd g = green_direct(network, reservoirs, cdouble(0.0, w));
        MatrixXcd x = MatrixXcd::Zero(k, k);
        MatrixXcd xc = MatrixXcd::Zero(k, k);  // classical weights, for the infinite-cutoff pp block
        const double base = 2.0 / std::numbers::pi * g0 * lorentz(reservoirs, w);
        for (std::size_t l = 0; l < reservoirs.count(); ++l) {
            const MatrixXcd gl = columns_at(g, reservoirs.contacts[l]);
            const MatrixXcd ggh = gl * gl.adjoint();
            const double t = reservoirs.temperatures[l];
            x += (base * thermal_weight(w, t, config.thermal)) * ggh;
            if (infinite) xc += (base * 2.0 * t) * ggh;
        }
        VectorXd out(3 * kk);
        Eigen::Map<MatrixXd>(out.data(), k, k) = x.real();
        Eigen::Map<MatrixXd>(out.data() + kk, k, k) = w * x.imag();
        Eigen::Map<MatrixXd>(out.data() + 2 * kk, k, k) = w * w * (infinite ? xc : x).real();
        return out;
    };

    double wmax = 0.0;
    const std::vector<double> pts = oracle_breakpoints(network, reservoirs, config, &wmax);
    const std::vector<Index> groups{kk, kk, kk};
    // The xp block can vanish identically (equilibrium); it is then measured
    // against sqrt(|xx| |pp|), which bounds it.
    const double wmin = closed_modes(network).frequencies.minCoeff();
    const ScaleFn scales = [kk, wmin](const VectorXd& v) {
        const double xx = v.segment(0, kk).cwiseAbs().maxCoeff();
        const double xp = v.segment(kk, kk).cwiseAbs().maxCoeff();
        const double pp = v.segment(2 * kk, kk).cwiseAbs().maxCoeff();
        return std::vector<double>{xx, std::max({xp, std::sqrt(xx * pp), wmin * xx}), pp};
    };
    const Split s = integrate_split(integrand, 3 * kk, pts, config, groups, scales);
    OracleCovariance out;
    out.diagnostics = diagnose(s, wmax, groups, scales);
    require_converged(out.diagnostics, "covariance");

    const VectorXd v = s.value();
    const MatrixXd s00 = Eigen::Map<const MatrixXd>(v.data(), k, k);
    const MatrixXd s01 = Eigen::Map<const MatrixXd>(v.data() + kk, k, k);
    const MatrixXd s11 = Eigen::Map<const MatrixXd>(v.data() + 2 * kk, k, k);
    const MatrixXd& m = network.mass();
    out.blocks.sigma_xx = 0.5 * (s00 + s00.transpose());
    out.blocks.sigma_xp = s01 * m;
    const MatrixXd pp = m * s11 * m;
    out.blocks.sigma_pp = 0.5 * (pp + pp.transpose());
    out.blocks.regime = infinite ? Regime::InfiniteCutoff : Regime::FiniteCutoff;
    out.pp_high_temperature_only = infinite && config.thermal == ThermalModel::Quantum;
    out.blocks.pp_low_T_valid = !out.pp_high_temperature_only;
    return out;
}

OracleHeat quadrature_heat(const HarmonicNetwork& network, const ReservoirSet& reservoirs,
                           const QuadratureConfig& config) {
    require_valid(network, reservoirs);
    const auto nl = static_cast<Index>(reservoirs.count());
    auto integrand = [&](double w) -> VectorXd {
        const MatrixXcd g = green_direct(network, reservoirs, cdouble(0.0, w));
        const double rho = spectral_density(reservoirs, w);
        VectorXd out = VectorXd::Zero(nl * nl);
        for (Index l = 0; l < nl; ++l)
            for (Index lp = 0; lp < nl; ++lp) {
                if (l == lp) continue;
                const double tl = reservoirs.temperatures[l], tlp = reservoirs.temperatures[lp];
                if (tl == tlp) continue;
                double s = 0.0;
                for (int i : reservoirs.contacts[l])
                    for (int j : reservoirs.contacts[lp]) s += std::norm(g(i, j));
                out[l + nl * lp] = std::numbers::pi * rho * rho * s *
                                   (thermal_weight(w, tl, config.thermal) -
                                    thermal_weight(w, tlp, config.thermal));
            }
        return out;
    };
    double wmax = 0.0;
    const std::vector<double> pts = oracle_breakpoints(network, reservoirs, config, &wmax);
    const std::vector<Index> groups{nl * nl};
    const Split s = integrate_split(integrand, nl * nl, pts, config, groups);
    OracleHeat out;
    out.diagnostics = diagnose(s, wmax, groups);
    require_converged(out.diagnostics, "heat");
    const VectorXd v = s.value();
    out.currents.pairwise = Eigen::Map<const MatrixXd>(v.data(), nl, nl);
    out.currents.totals = out.currents.pairwise.rowwise().sum();
    out.currents.regime =
        reservoirs.cutoff.is_infinite() ? Regime::InfiniteCutoff : Regime::FiniteCutoff;
    return out;
}

std::vector<DiscrepancyRow> compare_blocks(const std::string& quantity,
                                           const Eigen::MatrixXd& spectral,
                                           const Eigen::MatrixXd& oracle,
                                           const DiscrepancyTolerance& tol, double block_norm) {
    if (spectral.rows() != oracle.rows() || spectral.cols() != oracle.cols())
        fail(ErrorCode::InvalidArgument, "compared blocks differ in shape");
    const double norm =
        std::max(block_norm, oracle.size() ? oracle.cwiseAbs().maxCoeff() : 0.0);
    std::vector<DiscrepancyRow> rows;
    for (Index j = 0; j < oracle.cols(); ++j)
        for (Index i = 0; i < oracle.rows(); ++i) {
            DiscrepancyRow r;
            r.quantity = quantity;
            r.row = i;
            r.col = j;
            r.spectral = spectral(i, j);
            r.oracle = oracle(i, j);
            const double floor = tol.small_threshold * norm;
            const bool small = std::abs(r.oracle) < floor;
            const double denom = std::max(std::abs(r.oracle), floor);
            const double diff = std::abs(r.spectral - r.oracle);
            r.rel_error = denom > 0.0 ? diff / denom : diff;
            r.tolerance = small ? tol.small_relative : tol.relative;
            r.pass = r.rel_error <= r.tolerance;
            rows.push_back(r);
        }
    return rows;
}

double xp_scale(const CovarianceBlocks& blocks, const HarmonicNetwork& network) {
    const double xx = blocks.sigma_xx.cwiseAbs().maxCoeff();
    const double pp = blocks.sigma_pp.cwiseAbs().maxCoeff();
    const double wmin = closed_modes(network).frequencies.minCoeff();
    const double mmin = network.mass().diagonal().minCoeff();
    return std::max(std::sqrt(xx * pp), wmin * mmin * xx);
}

std::string format_report(const std::vector<DiscrepancyRow>& rows) {
    std::ostringstream os;
    os << "quantity row col spectral oracle rel_error tolerance status\n";
    for (const auto& r : rows)
        os << r.quantity << ' ' << r.row << ' ' << r.col << ' ' << format_double(r.spectral) << ' '
           << format_double(r.oracle) << ' ' << format_double(r.rel_error) << ' '
           << format_double(r.tolerance) << ' ' << (r.pass ? "PASS" : "FAIL") << '\n';
    return os.str();
}

bool all_pass(const std::vector<DiscrepancyRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const DiscrepancyRow& r) { return r.pass; });
}

}  // namespace heatnet
