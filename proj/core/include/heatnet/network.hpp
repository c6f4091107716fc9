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
/// Harmonic networks and the Ohmic reservoirs they are attached to.
///
/// Every solver takes the renormalized potential V_R. The bare potential
/// needed by the finite-cutoff pencil is rebuilt as V = V_R + gamma0 * Lambda * P_T.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace heatnet {

/// K oscillators with mass matrix M and renormalized potential V_R.
class HarmonicNetwork {
public:
    HarmonicNetwork() = default;
    /// Throws InvalidArgument on shape mismatch or a non-finite entry.
    HarmonicNetwork(Eigen::MatrixXd mass, Eigen::MatrixXd potential);

    Eigen::Index size() const noexcept { return mass_.rows(); }
    const Eigen::MatrixXd& mass() const noexcept { return mass_; }
    const Eigen::MatrixXd& potential() const noexcept { return potential_; }
    bool mass_is_diagonal() const;

private:
    Eigen::MatrixXd mass_;
    Eigen::MatrixXd potential_;
};

/// Lorentz-Drude cutoff shared by all reservoirs; may be infinite.
class Cutoff {
public:
    static Cutoff infinite() noexcept { return Cutoff(); }
    static Cutoff finite(double lambda);

    bool is_infinite() const noexcept { return infinite_; }
    /// Throws InvalidArgument when called on an infinite cutoff.
    double value() const;

private:
    Cutoff() = default;
    bool infinite_ = true;
    double lambda_ = 0.0;
};

/// L reservoirs, each touching a set of sites through a diagonal 0/1
/// projector P_l, sharing the coupling gamma0 and the cutoff.
struct ReservoirSet {
    std::vector<std::vector<int>> contacts;
    std::vector<double> temperatures;
    double gamma0 = 0.0;
    Cutoff cutoff = Cutoff::infinite();

    std::size_t count() const noexcept { return contacts.size(); }
    Eigen::MatrixXd projector(std::size_t l, Eigen::Index size) const;
    Eigen::MatrixXd total_projector(Eigen::Index size) const;
    /// Same reservoirs at different temperatures.
    ReservoirSet with_temperatures(std::vector<double> temps) const;
    ReservoirSet with_gamma0(double g) const;
    ReservoirSet with_cutoff(Cutoff c) const;
};

struct ValidationReport {
    bool mass_symmetric = true;
    bool mass_positive_definite = true;
    bool potential_symmetric = true;
    bool potential_positive_definite = true;
    bool contacts_in_range = true;
    bool contacts_disjoint = true;
    bool parameters_valid = true;
    /// M commutes with every P_l; the heat-current formulas rely on it.
    bool mass_commutes_with_contacts = true;
    Eigen::Index contact_rank = 0;
    /// K - rank(P_T): number of poles pinned at omega = i*Lambda.
    Eigen::Index lambda_pole_multiplicity = 0;
    std::vector<std::string> issues;

    bool ok() const noexcept { return issues.empty(); }
};

/// Pure report, never throws.
ValidationReport validate(const HarmonicNetwork& network, const ReservoirSet& reservoirs);

/// Throws InvalidArgument / ContactOverlap / UnstableNetwork for the first
/// hard violation found by validate().
void require_valid(const HarmonicNetwork& network, const ReservoirSet& reservoirs);

/// Dense text matrix: first line K, then K rows of K numbers.
Eigen::MatrixXd read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const Eigen::MatrixXd& m);
Eigen::MatrixXd parse_matrix_text(const std::string& text);
std::string format_matrix_text(const Eigen::MatrixXd& m);

}  // namespace heatnet
