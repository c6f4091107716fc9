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
/// Stationary covariance of the network from closed-form spectral sums.
///
/// The exported blocks are physical: sigma_xx = <x x^T>, sigma_xp = <x p^T>
/// (symmetrized) and sigma_pp = <p p^T>, with p = M dx/dt.

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "heatnet/network.hpp"
#include "heatnet/spectral.hpp"

namespace heatnet {

enum class Regime { FiniteCutoff, InfiniteCutoff, Weak };

/// Quantum uses coth(w/2T); Classical keeps only the 2T/w part of it.
enum class ThermalModel { Quantum, Classical };

std::string to_string(Regime r);
std::string to_string(ThermalModel t);

struct CovarianceBlocks {
    Eigen::MatrixXd sigma_xx;
    Eigen::MatrixXd sigma_xp;
    Eigen::MatrixXd sigma_pp;
    Regime regime = Regime::FiniteCutoff;
    /// False when sigma_pp holds only the high-temperature term at a
    /// temperature where the low-temperature correction matters.
    bool pp_low_T_valid = true;
    /// Largest discarded imaginary part relative to the real part.
    double imag_residue = 0.0;

    /// [[xx, xp], [xp^T, pp]].
    Eigen::MatrixXd full() const;
};

struct CovarianceOptions {
    ThermalModel thermal = ThermalModel::Quantum;
    /// Drop the low-temperature correction everywhere.
    bool high_temperature_only = false;
    /// Infinite cutoff: sigma_pp is flagged when some T_l < classicality * max Omega.
    double classicality = 10.0;
};

CovarianceBlocks covariance_finite_cutoff(const ModeSet& modes, const HarmonicNetwork& network,
                                          const ReservoirSet& reservoirs,
                                          const CovarianceOptions& options = {});
CovarianceBlocks covariance_infinite_cutoff(const ModeSet& modes, const HarmonicNetwork& network,
                                            const ReservoirSet& reservoirs,
                                            const CovarianceOptions& options = {});
/// Lowest order in gamma0: classical equipartition of each closed mode at
/// the contact-weighted temperature.
CovarianceBlocks covariance_weak_coupling(const ClosedModes& closed, const HarmonicNetwork& network,
                                          const ReservoirSet& reservoirs);

/// Dispatches on the regime, solving the modes as needed.
CovarianceBlocks stationary_covariance(const HarmonicNetwork& network,
                                       const ReservoirSet& reservoirs, Regime regime,
                                       const CovarianceOptions& options = {});

struct LocalTemperatures {
    Eigen::VectorXd values;   ///< sigma_pp(i, i) / m_i
    bool high_t_only = false;
};

LocalTemperatures local_temperatures(const CovarianceBlocks& cov, const HarmonicNetwork& network);

/// Power injected by each reservoir, Tr(P_l V_R <x v^T>) with v = M^-1 p.
/// Requires M to commute with every P_l.
std::vector<double> heat_from_covariance(const CovarianceBlocks& cov,
                                         const HarmonicNetwork& network,
                                         const ReservoirSet& reservoirs);

/// Smallest eigenvalue of the Hermitian matrix Sigma + (i/2) J.
double uncertainty_margin(const CovarianceBlocks& cov);

}  // namespace heatnet
