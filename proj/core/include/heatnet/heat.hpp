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
/// Stationary heat currents between reservoirs.
///
/// Sign convention: totals(l) > 0 means net energy flows from reservoir l
/// into the network. pairwise(l, l') is the part of it exchanged with l'.

#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "heatnet/network.hpp"
#include "heatnet/spectral.hpp"
#include "heatnet/stationary.hpp"

namespace heatnet {

struct HeatCurrentMatrix {
    Eigen::MatrixXd pairwise;
    Eigen::VectorXd totals;
    Regime regime = Regime::FiniteCutoff;
    double imag_residue = 0.0;
    /// Weak coupling only: contribution of each normal mode to `pairwise`.
    std::vector<Eigen::MatrixXd> mode_contributions;

    /// |sum_l totals(l)| / max_l |totals(l)|, zero when all totals vanish.
    double conservation_error() const;
};

struct HeatOptions {
    ThermalModel thermal = ThermalModel::Quantum;
};

/// 2i(T_l - T_l')/w - (2/pi)[psi(1 - i w/2 pi T_l) - psi(1 - i w/2 pi T_l')].
/// The classical model keeps the first term only.
cdouble delta_ll(cdouble omega, double t_l, double t_lp,
                 ThermalModel thermal = ThermalModel::Quantum);

HeatCurrentMatrix heat_finite_cutoff(const ModeSet& modes, const ReservoirSet& reservoirs,
                                     const HeatOptions& options = {});
HeatCurrentMatrix heat_infinite_cutoff(const ModeSet& modes, const ReservoirSet& reservoirs,
                                       const HeatOptions& options = {});
HeatCurrentMatrix heat_weak_coupling(const ClosedModes& closed, const ReservoirSet& reservoirs,
                                     const HeatOptions& options = {});

/// Dispatches on the regime, solving the modes as needed.
HeatCurrentMatrix heat_currents(const HarmonicNetwork& network, const ReservoirSet& reservoirs,
                                Regime regime, const HeatOptions& options = {});

struct SymmetricEstimate {
    double qdot = 0.0;            ///< c gamma0 <1/m> (T_A - T_B)
    double per_site = 0.0;        ///< qdot / c
    std::size_t contact_size = 0; ///< c
    double mean_inverse_mass = 0.0;
};

/// Anomalous-transport estimate for two reservoirs related by a site
/// permutation S (default: reversal of the site order). Throws NotSymmetric
/// when M, V_R or the contacts are not mapped onto each other by S.
SymmetricEstimate heat_symmetric_estimate(const HarmonicNetwork& network,
                                          const ReservoirSet& reservoirs,
                                          std::optional<std::vector<int>> permutation = {},
                                          double tolerance = 1e-10);

/// Heat transfer matrix on a frequency grid. values[k](l, l') is
/// -pi Tr(I_l G I_l' G^H) off the diagonal and Im Tr(P_l V_R G I_l G^H) on it.
struct TransmissionSpectrum {
    Eigen::VectorXd frequencies;
    std::vector<Eigen::MatrixXd> values;
};

TransmissionSpectrum transmission_spectrum(const HarmonicNetwork& network,
                                           const ReservoirSet& reservoirs,
                                           const Eigen::VectorXd& grid);
TransmissionSpectrum transmission_spectrum(const ModeSet& modes, const HarmonicNetwork& network,
                                           const ReservoirSet& reservoirs,
                                           const Eigen::VectorXd& grid);
/// Single off-diagonal element; rejects l == l'.
double transmission_element(const HarmonicNetwork& network, const ReservoirSet& reservoirs,
                            double omega, std::size_t l, std::size_t lp);

/// (2/pi) gamma0 w Lambda^2 / (w^2 + Lambda^2); the Lorentz factor is 1 for an infinite cutoff.
double spectral_density(const ReservoirSet& reservoirs, double omega);

}  // namespace heatnet
