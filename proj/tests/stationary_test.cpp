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

#include <cmath>

#include <gtest/gtest.h>

#include "heatnet/error.hpp"
#include "heatnet/oracle.hpp"
#include "heatnet/random_network.hpp"
#include "heatnet/spectral.hpp"
#include "heatnet/stationary.hpp"
#include "support.hpp"

namespace heatnet {
namespace {

using Eigen::MatrixXd;
using testing::reservoirs;
using testing::single_oscillator;

CovarianceOptions classical() {
    CovarianceOptions o;
    o.thermal = ThermalModel::Classical;
    return o;
}

double max_oracle_error(const CovarianceBlocks& c, const OracleCovariance& o, const HarmonicNetwork& net) {
    double e = testing::max_rel(c.sigma_xx, o.blocks.sigma_xx);
    e = std::max(e, (c.sigma_xp - o.blocks.sigma_xp).cwiseAbs().maxCoeff() / xp_scale(o.blocks, net));
    if (o.pp_computed) e = std::max(e, testing::max_rel(c.sigma_pp, o.blocks.sigma_pp));
    return e;
}

TEST(FiniteCutoff, HighTemperatureSingleSite) {
    const auto net = single_oscillator(1.0, 1.0);
    const auto res = reservoirs({{0}}, {10.0}, 0.05, Cutoff::finite(50.0));
    const CovarianceBlocks c = stationary_covariance(net, res, Regime::FiniteCutoff);
    EXPECT_NEAR(c.sigma_xx(0, 0) / 10.0, 1.0, 0.01);
    EXPECT_NEAR(c.sigma_pp(0, 0) / 10.0, 1.0, 0.1);
    const OracleCovariance o = quadrature_covariance(net, res);
    EXPECT_LT(max_oracle_error(c, o, net), 1e-6);
    EXPECT_LT(c.imag_residue, 1e-10);
}

TEST(FiniteCutoff, EqualTemperaturesIgnorePartition) {
    const RandomCase rc = random_case(5, [] {
        RandomNetworkOptions o;
        o.size = 4;
        return o;
    }());
    ReservoirSet split = reservoirs({{0}, {2, 3}}, {3.0, 3.0}, 0.2, Cutoff::finite(60.0));
    ReservoirSet joined = reservoirs({{0, 2, 3}}, {3.0}, 0.2, Cutoff::finite(60.0));
    const CovarianceBlocks a = stationary_covariance(rc.network, split, Regime::FiniteCutoff);
    const CovarianceBlocks b = stationary_covariance(rc.network, joined, Regime::FiniteCutoff);
    EXPECT_LT(testing::max_rel(a.full(), b.full()), 1e-11);
}

TEST(FiniteCutoff, ZeroTemperatureVacuumUncertainty) {
    const auto net = single_oscillator(1.0, 1.0);
    for (double g : {0.01, 0.3, 2.0}) {
        const auto res = reservoirs({{0}}, {0.0}, g, Cutoff::finite(30.0));
        const CovarianceBlocks c = stationary_covariance(net, res, Regime::FiniteCutoff);
        EXPECT_GE(c.sigma_xx(0, 0) * c.sigma_pp(0, 0), 0.25) << g;
        EXPECT_GE(uncertainty_margin(c), -1e-12);
        const OracleCovariance o = quadrature_covariance(net, res);
        EXPECT_LT(max_oracle_error(c, o, net), 1e-6) << g;
    }
}

TEST(FiniteCutoff, RandomNetworksMatchOracle) {
    for (std::uint64_t seed : {7u, 8u, 9u}) {
        const RandomCase rc = random_case(seed);
        const CovarianceBlocks c = stationary_covariance(rc.network, rc.reservoirs, Regime::FiniteCutoff);
        const OracleCovariance o = quadrature_covariance(rc.network, rc.reservoirs);
        ASSERT_TRUE(o.diagnostics.converged);
        EXPECT_LT(max_oracle_error(c, o, rc.network), 1e-6) << seed;
    }
}

TEST(InfiniteCutoff, EquipartitionSingleSite) {
    const auto net = single_oscillator(1.0, 1.0);
    const auto res = reservoirs({{0}}, {100.0}, 0.1, Cutoff::infinite());
    const CovarianceBlocks c = stationary_covariance(net, res, Regime::InfiniteCutoff);
    EXPECT_NEAR(c.sigma_xx(0, 0) / 100.0, 1.0, 0.005);
    EXPECT_NEAR(c.sigma_pp(0, 0) / 100.0, 1.0, 0.005);
    EXPECT_TRUE(c.pp_low_T_valid);
    const auto cold = reservoirs({{0}}, {0.5}, 0.1, Cutoff::infinite());
    EXPECT_FALSE(stationary_covariance(net, cold, Regime::InfiniteCutoff).pp_low_T_valid);
}

TEST(InfiniteCutoff, ClassicalMatchesLyapunov) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const RandomCase rc = random_case(seed);
        const ReservoirSet res = rc.reservoirs.with_cutoff(Cutoff::infinite());
        const CovarianceBlocks c = stationary_covariance(rc.network, res, Regime::InfiniteCutoff, classical());
        const MatrixXd s = testing::classical_lyapunov(rc.network, res);
        const Eigen::Index k = rc.network.size();
        if (s.norm() == 0.0) {  // every bath at T = 0: the classical state is empty
            EXPECT_EQ(c.full().norm(), 0.0);
            continue;
        }
        EXPECT_LT(testing::max_rel(c.sigma_xx, s.topLeftCorner(k, k)), 1e-9) << seed;
        EXPECT_LT(testing::max_rel(c.sigma_pp, s.bottomRightCorner(k, k)), 1e-9) << seed;
        const double xp_norm = std::sqrt(s.topLeftCorner(k, k).norm() * s.bottomRightCorner(k, k).norm());
        EXPECT_LT((c.sigma_xp - s.topRightCorner(k, k)).cwiseAbs().maxCoeff() / xp_norm, 1e-9) << seed;
    }
}

TEST(InfiniteCutoff, EqualTemperatureStationarity) {
    const RandomCase rc = random_case(4);
    ReservoirSet res = rc.reservoirs.with_cutoff(Cutoff::infinite());
    res.temperatures.assign(res.count(), 80.0);
    const CovarianceBlocks c = stationary_covariance(rc.network, res, Regime::InfiniteCutoff);
    const MatrixXd minv = rc.network.mass().inverse();
    const MatrixXd sym = minv * c.sigma_xp.transpose() + c.sigma_xp * minv;
    EXPECT_LE(sym.cwiseAbs().maxCoeff() / (minv * c.sigma_pp).norm(), 1e-9);
}

TEST(FiniteCutoff, EqualTemperaturesGiveVanishingMixedBlock) {
    const RandomCase rc = random_case(9);
    ReservoirSet res = rc.reservoirs;
    res.temperatures.assign(res.count(), 40.0);
    const CovarianceBlocks c = stationary_covariance(rc.network, res, Regime::FiniteCutoff);
    EXPECT_EQ(c.sigma_xp.cwiseAbs().maxCoeff(), 0.0);
    const CovarianceBlocks k = stationary_covariance(rc.network, res, Regime::FiniteCutoff, classical());
    EXPECT_LE((k.sigma_pp - 40.0 * rc.network.mass()).cwiseAbs().maxCoeff(), 1e-12 * k.sigma_pp.norm());
}

TEST(InfiniteCutoff, FiniteCutoffConverges) {
    for (std::uint64_t seed : {2u, 6u}) {
        const RandomCase rc = random_case(seed);
        const ClosedModes cm = closed_modes(rc.network);
        const double wmax = cm.frequencies.maxCoeff();
        const ReservoirSet fin = rc.reservoirs.with_cutoff(Cutoff::finite(1e3 * wmax));
        const ReservoirSet inf = rc.reservoirs.with_cutoff(Cutoff::infinite());
        const CovarianceBlocks a = stationary_covariance(rc.network, fin, Regime::FiniteCutoff);
        const CovarianceBlocks b = stationary_covariance(rc.network, inf, Regime::InfiniteCutoff);
        EXPECT_LT(testing::max_rel(a.sigma_xx, b.sigma_xx), 0.01) << seed;
        EXPECT_LT((a.sigma_xp - b.sigma_xp).cwiseAbs().maxCoeff() / xp_scale(b, rc.network), 0.01) << seed;
    }
}

TEST(InfiniteCutoff, RejectsCubicModes) {
    const auto net = single_oscillator(1.0, 1.0);
    const auto res = reservoirs({{0}}, {1.0}, 0.1, Cutoff::finite(10.0));
    const ModeSet cubic = solve_modes(net, res);
    EXPECT_THROW(covariance_infinite_cutoff(cubic, net, res), Error);
}

TEST(WeakCoupling, SingleSiteEquipartition) {
    const auto net = single_oscillator(2.0, 8.0);
    const auto res = reservoirs({{0}}, {7.0}, 1e-3, Cutoff::infinite());
    const CovarianceBlocks c = stationary_covariance(net, res, Regime::Weak);
    EXPECT_NEAR(c.sigma_xx(0, 0), 7.0 / 8.0, 1e-13);
    EXPECT_NEAR(c.sigma_pp(0, 0), 14.0, 1e-12);
    const auto two = reservoirs({{0}, {}}, {7.0, 7.0}, 1e-3, Cutoff::infinite());
    EXPECT_THROW(stationary_covariance(net, two, Regime::Weak), Error);  // empty contact set
}

TEST(WeakCoupling, TwoEqualBathsActLikeOne) {
    const auto net = testing::uniform_chain(4);
    const auto a = reservoirs({{0}, {3}}, {5.0, 5.0}, 1e-3, Cutoff::infinite());
    const auto b = reservoirs({{0, 3}}, {5.0}, 1e-3, Cutoff::infinite());
    EXPECT_LT(testing::max_rel(stationary_covariance(net, a, Regime::Weak).full(),
                               stationary_covariance(net, b, Regime::Weak).full()),
              1e-12);
}

TEST(WeakCoupling, ChainApproachesFullSolution) {
    const auto net = testing::uniform_chain(8);
    const double g = 1e-4;
    const auto res = reservoirs({{0}, {7}}, {1.2, 0.8}, g, Cutoff::infinite());
    const CovarianceBlocks w = stationary_covariance(net, res, Regime::Weak);
    const CovarianceBlocks f = stationary_covariance(net, res, Regime::InfiniteCutoff, classical());
    EXPECT_LT(testing::max_rel(w.sigma_xx, f.sigma_xx), 50.0 * g);
    EXPECT_LT(testing::max_rel(w.sigma_pp, f.sigma_pp), 50.0 * g);
}

TEST(LocalTemperatures, EquilibriumAndBounds) {
    const RandomCase rc = random_case(3);
    ReservoirSet eq = rc.reservoirs.with_cutoff(Cutoff::infinite()).with_gamma0(1e-3);
    eq.temperatures.assign(eq.count(), 50.0);
    const LocalTemperatures t = local_temperatures(stationary_covariance(rc.network, eq, Regime::Weak), rc.network);
    for (Eigen::Index i = 0; i < t.values.size(); ++i) EXPECT_NEAR(t.values[i], 50.0, 0.5);

    const auto net = testing::uniform_chain(6);
    const auto res = reservoirs({{0}, {5}}, {2.0, 1.0}, 0.3, Cutoff::infinite());
    const LocalTemperatures lt =
        local_temperatures(stationary_covariance(net, res, Regime::InfiniteCutoff, classical()), net);
    for (Eigen::Index i = 0; i < lt.values.size(); ++i) {
        EXPECT_GE(lt.values[i], 1.0 - 1e-9);
        EXPECT_LE(lt.values[i], 2.0 + 1e-9);
    }

    const auto one = single_oscillator(3.0, 1.0);
    const CovarianceBlocks c1 = stationary_covariance(one, reservoirs({{0}}, {4.0}, 0.1, Cutoff::finite(20.0)),
                                                      Regime::FiniteCutoff);
    EXPECT_DOUBLE_EQ(local_temperatures(c1, one).values[0], c1.sigma_pp(0, 0) / 3.0);
}

TEST(Invariants, UncertaintyAndStationarityOnRandomNetworks) {
    for (std::uint64_t seed = 10; seed <= 15; ++seed) {
        const RandomCase rc = random_case(seed);
        const CovarianceBlocks c = stationary_covariance(rc.network, rc.reservoirs, Regime::FiniteCutoff);
        EXPECT_GE(uncertainty_margin(c), -1e-10 * c.full().norm()) << seed;
        const MatrixXd minv = rc.network.mass().inverse();
        const MatrixXd sym = minv * c.sigma_xp.transpose() + c.sigma_xp * minv;
        EXPECT_LE(sym.cwiseAbs().maxCoeff(), 1e-8 * xp_scale(c, rc.network) * minv.norm()) << seed;
        Eigen::SelfAdjointEigenSolver<MatrixXd> xx(c.sigma_xx), pp(c.sigma_pp);
        EXPECT_GT(xx.eigenvalues().minCoeff(), 0.0);
        EXPECT_GT(pp.eigenvalues().minCoeff(), 0.0);
    }
}

TEST(Blocks, FullLayout) {
    CovarianceBlocks c;
    c.sigma_xx = MatrixXd::Constant(1, 1, 1.0);
    c.sigma_xp = MatrixXd::Constant(1, 1, 2.0);
    c.sigma_pp = MatrixXd::Constant(1, 1, 3.0);
    MatrixXd f(2, 2);
    f << 1, 2, 2, 3;
    EXPECT_EQ(c.full(), f);
}

}  // namespace
}  // namespace heatnet
