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
/// Experiment configuration and the drivers behind the CLI verbs.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "heatnet/heat.hpp"
#include "heatnet/lattice.hpp"
#include "heatnet/network.hpp"
#include "heatnet/oracle.hpp"
#include "heatnet/power_law.hpp"
#include "heatnet/random_network.hpp"
#include "heatnet/stationary.hpp"

namespace heatnet {

enum class Mode { State, Heat, Scaling, Verify };

std::string to_string(Mode m);

struct NetworkSource {
    enum class Kind { Lattice, Matrices, Random };
    Kind kind = Kind::Matrices;
    LatticeSpec lattice;
    std::uint64_t realization = 0;
    Eigen::MatrixXd mass;
    Eigen::MatrixXd potential;
    RandomNetworkOptions random;
    std::uint64_t random_seed = 0;
    /// Random source: contacts, gamma0 and cutoff come from the generator
    /// unless the reservoir section overrides them.
};

struct ReservoirConfig {
    std::optional<std::vector<std::vector<int>>> contacts;  ///< lattice default: end slabs
    std::optional<std::vector<double>> temperatures;
    std::optional<double> gamma0;
    /// nullopt: not given; +inf: infinite cutoff.
    std::optional<double> cutoff;
};

struct SweepConfig {
    std::vector<int> sizes;
    std::vector<double> gamma0;
    /// Sizes below this are left out of the fit.
    int fit_min_size = 0;
};

struct TransmissionConfig {
    bool enabled = false;
    double omega_min = 0.0;
    double omega_max = 0.0;
    int points = 0;
};

struct ExperimentConfig {
    Mode mode = Mode::State;
    NetworkSource network;
    ReservoirConfig reservoirs;
    Regime regime = Regime::InfiniteCutoff;
    /// Defaults: classical for scaling, quantum otherwise.
    std::optional<ThermalModel> thermal;
    int realizations = 1;
    std::uint64_t seed = 0;
    SweepConfig sweep;
    TransmissionConfig transmission;
    QuadratureConfig quadrature;
    DiscrepancyTolerance tolerance;
    /// Verify: number of consecutive random seeds when the source is random.
    int verify_cases = 1;

    ThermalModel thermal_model() const;
};

/// Parses the JSON configuration; unknown keys and type errors throw ConfigError.
/// Relative matrix-file paths are resolved against `base_dir`.
ExperimentConfig parse_config(const std::string& text, const std::string& base_dir = "");
ExperimentConfig load_config(const std::string& path);

struct RunOptions {
    int threads = 1;
    bool deterministic = false;
    std::optional<std::uint64_t> seed;
};

/// Network and reservoirs of a non-scaling configuration.
std::pair<HarmonicNetwork, ReservoirSet> build_system(const ExperimentConfig& config,
                                                      const RunOptions& options = {});

struct StateResult {
    CovarianceBlocks covariance;
    LocalTemperatures temperatures;
    ThermalModel thermal = ThermalModel::Quantum;
    ValidationReport validation;
};

struct HeatResult {
    HeatCurrentMatrix currents;
    std::optional<TransmissionSpectrum> transmission;
    ThermalModel thermal = ThermalModel::Quantum;
    ValidationReport validation;
};

struct VerifyCase {
    std::uint64_t seed = 0;
    Regime regime = Regime::FiniteCutoff;
    std::vector<DiscrepancyRow> rows;
    QuadratureDiagnostics covariance_diagnostics;
    QuadratureDiagnostics heat_diagnostics;
    bool pass = true;
};

struct VerifyResult {
    std::vector<VerifyCase> cases;
    bool pass = true;
};

struct ScalingCell {
    double gamma0 = 0.0;
    int size = 0;
    std::vector<double> values;       ///< J / dT per realization, NaN when the solve failed
    std::vector<std::string> errors;  ///< empty string when the solve succeeded
    double mean = 0.0;
    double stddev = 0.0;
    int count = 0;
    int failures = 0;
    bool aborted = false;             ///< more than 20% of the realizations failed
};

struct ScalingFit {
    double gamma0 = 0.0;
    bool valid = false;
    PowerLawFit fit;
    int fit_min_size = 0;
    std::string note;
};

struct ScalingResult {
    std::vector<ScalingCell> cells;   ///< gamma0-major, then size
    std::vector<ScalingFit> fits;     ///< one per gamma0
    ThermalModel thermal = ThermalModel::Classical;
    Regime regime = Regime::InfiniteCutoff;
    std::vector<double> temperatures;
};

StateResult run_state(const ExperimentConfig& config, const RunOptions& options = {});
HeatResult run_heat(const ExperimentConfig& config, const RunOptions& options = {});
VerifyResult run_verify(const ExperimentConfig& config, const RunOptions& options = {});
ScalingResult run_scaling(const ExperimentConfig& config, const RunOptions& options = {});

/// J / dT of one lattice realization: current out of the hot reservoir per
/// contacted site.
double lattice_conductance(const LatticeSpec& spec, std::uint64_t realization, double gamma0,
                           Regime regime, std::optional<double> cutoff,
                           const std::vector<double>& temperatures, ThermalModel thermal);

}  // namespace heatnet
