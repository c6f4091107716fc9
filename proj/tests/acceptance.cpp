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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Arguments select a subset, e.g. `1 3`.

#include <algorithm>
#include <limits>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "heatnet/error.hpp"
#include "heatnet/experiment.hpp"
#include "heatnet/heat.hpp"
#include "heatnet/lattice.hpp"
#include "heatnet/oracle.hpp"
#include "heatnet/power_law.hpp"
#include "heatnet/random_network.hpp"
#include "heatnet/spectral.hpp"
#include "heatnet/stationary.hpp"

namespace {

using namespace heatnet;
using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;

constexpr int kCorpusSize = 25;
constexpr std::uint64_t kCorpusSeed = 1;
constexpr std::uint64_t kLatticeSeed = 2026;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail << " first failure: " << what << ';';
            pass = false;
        }
    }
};

std::vector<RandomCase> corpus() {
    std::vector<RandomCase> out;
    for (int i = 0; i < kCorpusSize; ++i) out.push_back(random_case(kCorpusSeed + i));
    return out;
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

// Largest entry-wise deviation relative to the block magnitude (or `scale`).
double block_dev(const MatrixXd& a, const MatrixXd& b, double scale = 0.0) {
    const double n = std::max(scale, b.cwiseAbs().maxCoeff());
    const double d = (a - b).cwiseAbs().maxCoeff();
    return n > 0.0 ? d / n : d;
}

std::string case_name(std::size_t i) { return "case seed " + std::to_string(kCorpusSeed + i); }

// 1. Spectral sums against the quadrature oracles on the random corpus.
void oracle_equivalence(Outcome& o) {
    const auto cases = corpus();
    const DiscrepancyTolerance tol;
    double worst = 0.0, worst_small = 0.0;
    int rows = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& [net, res] = cases[i];
        const ModeSet modes = solve_modes(net, res);
        const CovarianceBlocks cov = covariance_finite_cutoff(modes, net, res);
        const HeatCurrentMatrix heat = heat_finite_cutoff(modes, res);
        const OracleCovariance oc = quadrature_covariance(net, res);
        const OracleHeat oh = quadrature_heat(net, res);
        std::vector<DiscrepancyRow> all;
        auto add = [&](const std::vector<DiscrepancyRow>& r) { all.insert(all.end(), r.begin(), r.end()); };
        add(compare_blocks("sigma_xx", cov.sigma_xx, oc.blocks.sigma_xx, tol));
        add(compare_blocks("sigma_xp", cov.sigma_xp, oc.blocks.sigma_xp, tol, xp_scale(oc.blocks, net)));
        add(compare_blocks("sigma_pp", cov.sigma_pp, oc.blocks.sigma_pp, tol));
        add(compare_blocks("heat", heat.pairwise, oh.currents.pairwise, tol));
        for (const auto& r : all) {
            ++rows;
            if (r.tolerance == tol.relative) worst = std::max(worst, r.rel_error);
            else worst_small = std::max(worst_small, r.rel_error);
            o.require(r.pass, case_name(i) + " " + r.quantity + "(" + std::to_string(r.row) + "," +
                                  std::to_string(r.col) + ") rel " + num(r.rel_error));
        }
    }
    o.detail << ' ' << cases.size() << " cases, " << rows << " entries, worst rel "
             << num(worst) << " (tol 1e-6), worst small-entry rel " << num(worst_small)
             << " (tol 1e-4)";
}

// 2. Conservation on every solve, and vanishing currents at equal temperatures.
void conservation_equilibrium(Outcome& o) {
    const auto cases = corpus();
    double worst_cons = 0.0, worst_eq = 0.0;
    int solves = 0;
    auto check = [&](const HeatCurrentMatrix& q, const std::string& what) {
        ++solves;
        worst_cons = std::max(worst_cons, q.conservation_error());
        o.require(q.conservation_error() <= 1e-8, what + " conservation " + num(q.conservation_error()));
    };
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& [net, res] = cases[i];
        const ReservoirSet inf = res.with_cutoff(Cutoff::infinite());
        for (ThermalModel t : {ThermalModel::Quantum, ThermalModel::Classical}) {
            check(heat_currents(net, res, Regime::FiniteCutoff, {t}), case_name(i) + " finite");
            check(heat_currents(net, inf, Regime::InfiniteCutoff, {t}), case_name(i) + " infinite");
            check(heat_currents(net, inf.with_gamma0(1e-4), Regime::Weak, {t}), case_name(i) + " weak");
        }
        check(quadrature_heat(net, res).currents, case_name(i) + " oracle");

        ReservoirSet eq = res;
        const double t = std::max(1.0, *std::max_element(res.temperatures.begin(), res.temperatures.end()));
        eq.temperatures.assign(eq.count(), t);
        for (Regime r : {Regime::FiniteCutoff, Regime::InfiniteCutoff, Regime::Weak}) {
            ReservoirSet rr = r == Regime::FiniteCutoff ? eq : eq.with_cutoff(Cutoff::infinite());
            if (r == Regime::Weak) rr = rr.with_gamma0(1e-4);
            const double m = heat_currents(net, rr, r).pairwise.cwiseAbs().maxCoeff();
            worst_eq = std::max(worst_eq, m / (rr.gamma0 * t));
            o.require(m <= 1e-12 * rr.gamma0 * t, case_name(i) + " equilibrium current " + num(m));
        }
    }
    for (int n : {4, 8, 16, 32}) {
        LatticeSpec s;
        s.edge = n;
        ReservoirSet res = contacts_for_lattice(s);
        res.temperatures = {1.05, 0.95};
        res.gamma0 = 1e-4;
        check(heat_currents(build_lattice(s, 0).first, res, Regime::InfiniteCutoff), "chain");
    }
    o.detail << ' ' << solves << " solves, worst conservation " << num(worst_cons)
             << " (tol 1e-8), worst equilibrium |q|/(gamma0 T) " << num(worst_eq) << " (tol 1e-12)";
}

// 3. Finite -> infinite cutoff, and infinite cutoff -> weak coupling.
void limit_chain(Outcome& o) {
    const auto cases = corpus();
    double worst_cut = 0.0, worst_weak = 0.0, lo_exp = 1e300, hi_exp = -1e300;
    const CovarianceOptions classical{ThermalModel::Classical};
    const HeatOptions hclassical{ThermalModel::Classical};
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& [net, res] = cases[i];
        const double wmax = closed_modes(net).frequencies.maxCoeff();
        const ReservoirSet fin = res.with_cutoff(Cutoff::finite(1e3 * wmax));
        const ReservoirSet inf = res.with_cutoff(Cutoff::infinite());
        const CovarianceBlocks cf = stationary_covariance(net, fin, Regime::FiniteCutoff);
        const CovarianceBlocks ci = stationary_covariance(net, inf, Regime::InfiniteCutoff);
        const HeatCurrentMatrix qf = heat_currents(net, fin, Regime::FiniteCutoff);
        const HeatCurrentMatrix qi = heat_currents(net, inf, Regime::InfiniteCutoff);
        const double d = std::max({block_dev(cf.sigma_xx, ci.sigma_xx),
                                   block_dev(cf.sigma_xp, ci.sigma_xp, xp_scale(ci, net)),
                                   block_dev(qf.pairwise, qi.pairwise)});
        worst_cut = std::max(worst_cut, d);
        o.require(d <= 0.01, case_name(i) + " finite vs infinite cutoff " + num(d));

        // Weak coupling: classical state (the weak-coupling covariance is equipartition).
        double remainder[2];
        int k = 0;
        for (double g : {1e-3, 1e-4}) {
            const ReservoirSet r = inf.with_gamma0(g);
            const CovarianceBlocks a = stationary_covariance(net, r, Regime::InfiniteCutoff, classical);
            const CovarianceBlocks w = stationary_covariance(net, r, Regime::Weak, classical);
            const HeatCurrentMatrix qa = heat_currents(net, r, Regime::InfiniteCutoff, hclassical);
            const HeatCurrentMatrix qw = heat_currents(net, r, Regime::Weak, hclassical);
            remainder[k++] = std::max({block_dev(w.sigma_xx, a.sigma_xx),
                                       block_dev(w.sigma_xp, a.sigma_xp, xp_scale(a, net)),
                                       block_dev(w.sigma_pp, a.sigma_pp), block_dev(qw.pairwise, qa.pairwise)});
        }
        worst_weak = std::max(worst_weak, remainder[1]);
        o.require(remainder[1] <= 0.01, case_name(i) + " weak vs infinite " + num(remainder[1]));
        // Equilibrium cases agree to roundoff and carry no remainder to scale.
        if (remainder[0] > 1e-9) {
            const double p = std::log10(remainder[0] / remainder[1]);
            lo_exp = std::min(lo_exp, p);
            hi_exp = std::max(hi_exp, p);
            o.require(std::abs(p - 1.0) <= 0.1, case_name(i) + " remainder exponent " + num(p));
        }
    }
    o.detail << " worst finite/infinite dev " << num(worst_cut) << " (tol 0.01), worst weak/infinite dev "
             << num(worst_weak) << " at gamma0=1e-4 (tol 0.01), remainder exponent in ["
             << num(lo_exp) << ", " << num(hi_exp) << "] (linear = 1 +- 0.1)";
}

// 4. Uniform chains: conductance per site independent of N.
void anomalous_transport(Outcome& o) {
    const double g = 1e-4;
    std::vector<std::pair<double, double>> pts;
    double worst = 0.0;
    for (int n : {4, 8, 16, 32}) {
        LatticeSpec s;
        s.edge = n;
        const HarmonicNetwork net = build_lattice(s, 0).first;
        ReservoirSet res = contacts_for_lattice(s);
        res.temperatures = {105.0, 95.0};
        res.gamma0 = g;
        res.cutoff = Cutoff::infinite();
        const double j = lattice_conductance(s, 0, g, Regime::InfiniteCutoff, {}, res.temperatures,
                                             ThermalModel::Quantum);
        const SymmetricEstimate e = heat_symmetric_estimate(net, res, slab_reversal(s));
        const double expect = e.per_site / (res.temperatures[0] - res.temperatures[1]);
        const double dev = std::abs(j / expect - 1.0);
        worst = std::max(worst, dev);
        o.require(dev <= 0.02, "N=" + std::to_string(n) + " J/dT off by " + num(dev));
        pts.emplace_back(n, j);
    }
    const PowerLawFit fit = fit_power_law(pts);
    o.require(std::abs(fit.mu_fit) <= 0.05, "mu_fit " + num(fit.mu_fit));
    o.detail << " worst |J/dT / (gamma0 <1/m>) - 1| " << num(worst) << " (tol 0.02), mu_fit "
             << num(fit.mu_fit) << " (tol 0.05)";
}

ScalingResult lattice_sweep(int dim, std::vector<int> sizes) {
    ExperimentConfig c;
    c.mode = Mode::Scaling;
    c.network.kind = NetworkSource::Kind::Lattice;
    c.network.lattice.dim = dim;
    c.network.lattice.pinning = 10.0;
    c.network.lattice.mass_spread = 0.2;
    c.network.lattice.seed = kLatticeSeed;
    c.regime = Regime::InfiniteCutoff;
    c.realizations = 10;
    c.sweep.sizes = std::move(sizes);
    c.sweep.gamma0 = {0.5, 1e-3};
    return run_scaling(c);
}

// Failed realizations are excluded from a cell; a cell with more than 20%
// failures is aborted and fails the criterion.
bool sweep_ok(Outcome& o, const ScalingResult& r) {
    bool ok = true;
    int excluded = 0;
    for (const ScalingCell& c : r.cells) {
        excluded += c.failures;
        if (c.aborted) {
            o.require(false, "gamma0 " + num(c.gamma0) + " N=" + std::to_string(c.size) + ": " +
                                 std::to_string(c.failures) + " failed realizations");
            ok = false;
        }
    }
    o.detail << " excluded realizations " << excluded << ";";
    for (const ScalingFit& f : r.fits)
        if (!f.valid) {
            o.require(false, "fit at gamma0 " + num(f.gamma0) + " invalid: " + f.note);
            ok = false;
        }
    return ok;
}

// 5. 3D lattices: decreasing conductance at strong coupling, flat at weak coupling.
void cubic_trend(Outcome& o) {
    const ScalingResult r = lattice_sweep(3, {3, 4, 6});
    if (!sweep_ok(o, r)) return;
    const double strong = std::abs(r.fits[0].fit.slope), weak = std::abs(r.fits[1].fit.slope);
    o.require(strong >= 0.5 && strong <= 1.2, "|slope| at gamma0=0.5 is " + num(strong));
    o.require(weak <= 0.15, "|slope| at gamma0=1e-3 is " + num(weak));
    o.detail << " seed " << kLatticeSeed << ", R=10: slope " << num(r.fits[0].fit.slope)
             << " at gamma0=0.5 (|.| in [0.5, 1.2]), slope " << num(r.fits[1].fit.slope)
             << " at gamma0=1e-3 (|.| in [0, 0.15])";
}

// 6. 2D lattices: strong coupling decays faster than weak coupling.
void square_trend(Outcome& o) {
    const ScalingResult r = lattice_sweep(2, {4, 8, 16});
    if (!sweep_ok(o, r)) return;
    const double strong = std::abs(r.fits[0].fit.slope), weak = std::abs(r.fits[1].fit.slope);
    o.require(strong - weak >= 0.2, "|slope| gap " + num(strong - weak));
    o.detail << " seed " << kLatticeSeed << ", R=10: slope " << num(r.fits[0].fit.slope)
             << " at gamma0=0.5, slope " << num(r.fits[1].fit.slope) << " at gamma0=1e-3, gap "
             << num(strong - weak) << " (>= 0.2)";
}

struct SumRuleErrors {
    double zeroth = 0.0, first = 0.0, second = 0.0;
};

SumRuleErrors sum_rules(const ModeSet& modes, const HarmonicNetwork& net) {
    const Index k = net.size();
    MatrixXcd s0 = MatrixXcd::Zero(k, k), s1 = s0, s2 = s0;
    for (Index a = 0; a < modes.mode_count(); ++a) {
        const cdouble s = modes.eigenvalues[a];
        const MatrixXcd w = modes.kind == PencilKind::Cubic
                                ? MatrixXcd(modes.right.col(a) * modes.left.col(a).adjoint())
                                : MatrixXcd(modes.right.col(a) * modes.right.col(a).transpose());
        s0 += w;
        s1 += s * w;
        s2 += s * s * w;
    }
    const MatrixXd minv = net.mass().inverse();
    const double scale = minv.norm();
    SumRuleErrors e;
    if (modes.kind == PencilKind::Cubic) {
        e.zeroth = s0.norm() / scale;
        e.first = s1.norm() / (scale * modes.spectral_radius);
    } else {
        e.first = s1.norm() / (scale * modes.spectral_radius);
    }
    e.second = (s2 - minv.cast<cdouble>()).norm() / scale;
    return e;
}

// 7. Structural invariants on the corpus of criterion 1.
void invariant_suite(Outcome& o) {
    const auto cases = corpus();
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    double worst_rule = 0.0, worst_poly = 0.0, worst_unc = -std::numeric_limits<double>::infinity(), worst_stat = 0.0, worst_tr = 0.0;
    int checks = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& [net, res] = cases[i];
        const std::string name = case_name(i);
        const double wmax = closed_modes(net).frequencies.maxCoeff();
        for (const ReservoirSet& r : {res, res.with_cutoff(Cutoff::infinite())}) {
            const LinearPencil pencil = assemble_pencil(net, r);
            const ModeSet modes = solve_modes(pencil);
            const double tol_stab = 1e-10 * modes.spectral_radius;
            for (Index a = 0; a < modes.mode_count(); ++a) {
                ++checks;
                const cdouble s = modes.eigenvalues[a];
                o.require(s.real() < -tol_stab, name + " unstable mode");
                const int p = modes.conjugate_partner[static_cast<std::size_t>(a)];
                o.require(p >= 0 && modes.eigenvalues[p] == std::conj(s), name + " missing conjugate partner");
            }
            const SumRuleErrors e = sum_rules(modes, net);
            const double rule = std::max({e.zeroth, e.first, e.second});
            worst_rule = std::max(worst_rule, rule);
            o.require(rule <= 1e-8, name + " sum rule " + num(rule));

            cdouble ratio0 = 0.0;
            for (int t = 0; t < 5; ++t) {
                const cdouble s(u(gen) * wmax, u(gen) * wmax);
                const cdouble ratio = pencil_determinant(pencil, s) / matrix_polynomial(net, r, s).determinant();
                if (t == 0) ratio0 = ratio;
                const double d = std::abs(ratio / ratio0 - 1.0);
                worst_poly = std::max(worst_poly, d);
                o.require(d <= 1e-8, name + " characteristic polynomial " + num(d));
            }

            const Eigen::VectorXd grid = Eigen::VectorXd::LinSpaced(64, 0.02 * wmax, 2.0 * wmax);
            const TransmissionSpectrum tr = transmission_spectrum(modes, net, r, grid);
            double scale = 0.0;
            for (const MatrixXd& q : tr.values) scale = std::max(scale, q.cwiseAbs().maxCoeff());
            for (const MatrixXd& q : tr.values) {
                double d = (q - q.transpose()).cwiseAbs().maxCoeff();
                for (Index a = 0; a < q.rows(); ++a)
                    for (Index b = 0; b < q.cols(); ++b)
                        if (a != b) d = std::max(d, q(a, b));
                d = scale > 0.0 ? d / scale : d;
                worst_tr = std::max(worst_tr, d);
                o.require(d <= 1e-9, name + " transmission sign/symmetry " + num(d));
            }
        }
        const CovarianceBlocks c = stationary_covariance(net, res, Regime::FiniteCutoff);
        const double unc = -uncertainty_margin(c) / c.full().norm();
        worst_unc = std::max(worst_unc, unc);
        o.require(unc <= 1e-10, name + " uncertainty margin " + num(-unc));
        const MatrixXd minv = net.mass().inverse();
        const MatrixXd dxx = minv * c.sigma_xp.transpose() + c.sigma_xp * minv;
        const double stat = dxx.cwiseAbs().maxCoeff() / (xp_scale(c, net) * minv.norm());
        worst_stat = std::max(worst_stat, stat);
        o.require(stat <= 1e-8, name + " stationarity of sigma_xx " + num(stat));
    }
    o.detail << ' ' << checks << " modes; worst sum rule " << num(worst_rule)
             << ", char. polynomial " << num(worst_poly) << ", uncertainty "
             << num(-worst_unc) << " (least margin over |Sigma|), stationarity " << num(worst_stat)
             << ", transmission " << num(worst_tr);
}

// 8. Single oscillator: equipartition at high T and the vacuum uncertainty bound.
void single_oscillator(Outcome& o) {
    const double m = 2.0, v = 8.0, t = 100.0, w2 = v / m;
    MatrixXd mm(1, 1), vv(1, 1);
    mm << m;
    vv << v;
    const HarmonicNetwork net(mm, vv);
    double worst = 0.0;
    for (Regime r : {Regime::FiniteCutoff, Regime::InfiniteCutoff, Regime::Weak}) {
        ReservoirSet res;
        res.contacts = {{0}};
        res.temperatures = {t};
        res.gamma0 = 0.01;
        res.cutoff = r == Regime::FiniteCutoff ? Cutoff::finite(20.0) : Cutoff::infinite();
        const CovarianceBlocks c = stationary_covariance(net, res, r);
        const double dx = std::abs(c.sigma_xx(0, 0) / (t / (m * w2)) - 1.0);
        const double dp = std::abs(c.sigma_pp(0, 0) / (m * t) - 1.0);
        worst = std::max({worst, dx, dp});
        o.require(dx <= 0.005 && dp <= 0.005, to_string(r) + " equipartition off by " + num(std::max(dx, dp)));
    }
    double least = 1e300;
    for (double g : {0.01, 0.1, 1.0})
        for (double lam : {10.0, 100.0, 1000.0}) {
            ReservoirSet res;
            res.contacts = {{0}};
            res.temperatures = {0.0};
            res.gamma0 = g;
            res.cutoff = Cutoff::finite(lam);
            const CovarianceBlocks c = stationary_covariance(net, res, Regime::FiniteCutoff);
            const double prod = c.sigma_xx(0, 0) * c.sigma_pp(0, 0);
            least = std::min(least, prod);
            o.require(prod >= 0.25, "T=0 product " + num(prod));
        }
    o.detail << " worst equipartition dev " << num(worst) << " (tol 0.005), least T=0 sigma_xx*sigma_pp "
             << num(least) << " (>= 0.25)";
}

struct Criterion {
    int id;
    const char* name;
    std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{
        {1, "oracle equivalence", oracle_equivalence},
        {2, "conservation and equilibrium", conservation_equilibrium},
        {3, "limit chain", limit_chain},
        {4, "anomalous transport in uniform chains", anomalous_transport},
        {5, "3D lattice trend", cubic_trend},
        {6, "2D lattice trend", square_trend},
        {7, "invariant suite", invariant_suite},
        {8, "single-oscillator physics", single_oscillator},
    };
    std::set<int> chosen;
    for (int i = 1; i < argc; ++i) chosen.insert(std::atoi(argv[i]));

    bool ok = true;
    for (const Criterion& c : all) {
        if (!chosen.empty() && !chosen.count(c.id)) continue;
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " error: " << e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %d (%s):%s [%.1f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.str().c_str(), secs);
        std::fflush(stdout);
        ok = ok && o.pass;
    }
    return ok ? 0 : 1;
}
