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

/// @file
/// Brute-force reference values: frequency integrals of the covariance and
/// of the heat flow with G(i w) obtained by direct inversion at every node.
/// An eigensolve is used only to place breakpoints near resonances.

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "heatnet/heat.hpp"
#include "heatnet/network.hpp"
#include "heatnet/quadrature.hpp"
#include "heatnet/stationary.hpp"

namespace heatnet {

struct QuadratureConfig {
    double rel_tol = 1e-9;
    /// Absolute floor per entry, relative to the largest entry of its block.
    double component_floor = 1e-15;
    double abs_tol = 0.0;
    int max_subdivisions = 200000;
    /// Finite part of the range ends at this multiple of the largest |pole|;
    /// beyond it the integral is taken through w = w_max / t.
    double omega_max_multiplier = 50.0;
    /// Breakpoints at Re w_a + k Im w_a for these k (and their negatives).
    std::vector<double> resonance_offsets = {0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0};
    ThermalModel thermal = ThermalModel::Quantum;
};

struct QuadratureDiagnostics {
    double omega_max = 0.0;
    double tail_magnitude = 0.0;  ///< largest |component| of the [w_max, inf) piece
    double error_estimate = 0.0;  ///< largest component error relative to its block scale
    int intervals = 0;
    long evaluations = 0;
    bool converged = false;
};

struct OracleCovariance {
    CovarianceBlocks blocks;
    /// False when the (1,1) block was skipped (infinite cutoff with quantum weights).
    bool pp_computed = true;
    /// Infinite cutoff: the pp block holds the high-temperature (classical) part only.
    bool pp_high_temperature_only = false;
    QuadratureDiagnostics diagnostics;
};

struct OracleHeat {
    HeatCurrentMatrix currents;
    QuadratureDiagnostics diagnostics;
};

OracleCovariance quadrature_covariance(const HarmonicNetwork& network,
                                       const ReservoirSet& reservoirs,
                                       const QuadratureConfig& config = {});
OracleHeat quadrature_heat(const HarmonicNetwork& network, const ReservoirSet& reservoirs,
                           const QuadratureConfig& config = {});

/// w coth(w / 2T), with the limits 2T at w -> 0 and |w| at T = 0.
double thermal_weight(double omega, double temperature, ThermalModel thermal);

/// Breakpoints used by both oracles, sorted, from 0 to w_max inclusive.
std::vector<double> oracle_breakpoints(const HarmonicNetwork& network,
                                       const ReservoirSet& reservoirs,
                                       const QuadratureConfig& config, double* omega_max);

struct DiscrepancyRow {
    std::string quantity;
    Eigen::Index row = 0;
    Eigen::Index col = 0;
    double spectral = 0.0;
    double oracle = 0.0;
    double rel_error = 0.0;
    double tolerance = 0.0;
    bool pass = true;
};

struct DiscrepancyTolerance {
    double relative = 1e-6;
    double small_relative = 1e-4;
    double small_threshold = 1e-10;  ///< entries below this fraction of the block norm are "small"
};

/// Entry-wise comparison. The error is |a - b| / max(|b|, small_threshold * |block|),
/// where |block| is the largest |oracle| entry or `block_norm` if that is larger.
std::vector<DiscrepancyRow> compare_blocks(const std::string& quantity,
                                           const Eigen::MatrixXd& spectral,
                                           const Eigen::MatrixXd& oracle,
                                           const DiscrepancyTolerance& tol = {},
                                           double block_norm = 0.0);

/// Natural magnitude of the xp block: sqrt(max|xx| max|pp|), or
/// Omega_min m_min max|xx| when that is larger (pp may vanish at T = 0).
double xp_scale(const CovarianceBlocks& blocks, const HarmonicNetwork& network);

/// One line per row: quantity row col spectral oracle rel_error tolerance PASS|FAIL.
std::string format_report(const std::vector<DiscrepancyRow>& rows);

bool all_pass(const std::vector<DiscrepancyRow>& rows);

}  // namespace heatnet
