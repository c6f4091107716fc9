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

#include "heatnet/network.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "heatnet/error.hpp"

namespace heatnet {

namespace {

bool is_symmetric(const Eigen::MatrixXd& m) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return (m - m.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * scale;
}

bool is_positive_definite(const Eigen::MatrixXd& m) {
    if (m.size() == 0) return false;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (m + m.transpose()),
                                                      Eigen::EigenvaluesOnly);
    return es.info() == Eigen::Success && es.eigenvalues().minCoeff() > 0.0;
}

}  // namespace

HarmonicNetwork::HarmonicNetwork(Eigen::MatrixXd mass, Eigen::MatrixXd potential)
    : mass_(std::move(mass)), potential_(std::move(potential)) {
    if (mass_.rows() == 0 || mass_.rows() != mass_.cols())
        fail(ErrorCode::InvalidArgument, "mass matrix must be square and non-empty");
    if (potential_.rows() != mass_.rows() || potential_.cols() != mass_.cols())
        fail(ErrorCode::InvalidArgument, "potential and mass matrices differ in size");
    if (!mass_.allFinite() || !potential_.allFinite())
        fail(ErrorCode::InvalidArgument, "network matrices contain non-finite entries");
}

bool HarmonicNetwork::mass_is_diagonal() const {
    Eigen::MatrixXd off = mass_;
    off.diagonal().setZero();
    return off.cwiseAbs().maxCoeff() == 0.0;
}

Cutoff Cutoff::finite(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        fail(ErrorCode::InvalidArgument, "cutoff must be a positive finite number");
    Cutoff c;
    c.infinite_ = false;
    c.lambda_ = lambda;
    return c;
}

double Cutoff::value() const {
    if (infinite_) fail(ErrorCode::InvalidArgument, "cutoff is infinite");
    return lambda_;
}

Eigen::MatrixXd ReservoirSet::projector(std::size_t l, Eigen::Index size) const {
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(size, size);
    for (int site : contacts.at(l)) {
        if (site < 0 || site >= size)
            fail(ErrorCode::InvalidArgument, "contact site out of range");
        p(site, site) = 1.0;
    }
    return p;
}

Eigen::MatrixXd ReservoirSet::total_projector(Eigen::Index size) const {
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(size, size);
    for (std::size_t l = 0; l < contacts.size(); ++l) p += projector(l, size);
    return p;
}

ReservoirSet ReservoirSet::with_temperatures(std::vector<double> temps) const {
    ReservoirSet r = *this;
    r.temperatures = std::move(temps);
    return r;
}

ReservoirSet ReservoirSet::with_gamma0(double g) const {
    ReservoirSet r = *this;
    r.gamma0 = g;
    return r;
}

ReservoirSet ReservoirSet::with_cutoff(Cutoff c) const {
    ReservoirSet r = *this;
    r.cutoff = c;
    return r;
}

ValidationReport validate(const HarmonicNetwork& network, const ReservoirSet& reservoirs) {
    ValidationReport rep;
    const Eigen::Index k = network.size();
    const auto& m = network.mass();
    const auto& v = network.potential();

    rep.mass_symmetric = is_symmetric(m);
    rep.potential_symmetric = is_symmetric(v);
    rep.mass_positive_definite = rep.mass_symmetric && is_positive_definite(m);
    rep.potential_positive_definite = rep.potential_symmetric && is_positive_definite(v);
    if (!rep.mass_symmetric) rep.issues.push_back("mass matrix is not symmetric");
    if (rep.mass_symmetric && !rep.mass_positive_definite)
        rep.issues.push_back("mass matrix is not positive definite");
    if (!rep.potential_symmetric) rep.issues.push_back("potential matrix is not symmetric");
    if (rep.potential_symmetric && !rep.potential_positive_definite)
        rep.issues.push_back("potential has a non-positive eigenvalue (unstable network)");

    if (reservoirs.temperatures.size() != reservoirs.contacts.size()) {
        rep.parameters_valid = false;
        rep.issues.push_back("number of temperatures differs from number of reservoirs");
    }
    for (double t : reservoirs.temperatures) {
        if (!(t >= 0.0) || !std::isfinite(t)) {
            rep.parameters_valid = false;
            rep.issues.push_back("temperatures must be finite and non-negative");
            break;
        }
    }
    if (!(reservoirs.gamma0 > 0.0) || !std::isfinite(reservoirs.gamma0)) {
        rep.parameters_valid = false;
        rep.issues.push_back("gamma0 must be positive");
    }

    std::set<int> seen;
    for (std::size_t l = 0; l < reservoirs.contacts.size(); ++l) {
        std::set<int> own;
        if (reservoirs.contacts[l].empty()) {
            rep.parameters_valid = false;
            rep.issues.push_back("reservoir " + std::to_string(l) + " has no contact sites");
        }
        for (int site : reservoirs.contacts[l]) {
            if (site < 0 || site >= k) {
                rep.contacts_in_range = false;
                continue;
            }
            if (!own.insert(site).second) continue;
            if (!seen.insert(site).second) rep.contacts_disjoint = false;
        }
    }
    if (!rep.contacts_in_range) rep.issues.push_back("contact site index out of range");
    if (!rep.contacts_disjoint) rep.issues.push_back("contact sets overlap");

    rep.contact_rank = static_cast<Eigen::Index>(seen.size());
    rep.lambda_pole_multiplicity = k - rep.contact_rank;

    if (rep.contacts_in_range) {
        for (std::size_t l = 0; l < reservoirs.contacts.size(); ++l) {
            const Eigen::MatrixXd p = reservoirs.projector(l, k);
            if ((m * p - p * m).cwiseAbs().maxCoeff() > 1e-12 * m.cwiseAbs().maxCoeff()) {
                rep.mass_commutes_with_contacts = false;
            }
        }
    }
    return rep;
}

void require_valid(const HarmonicNetwork& network, const ReservoirSet& reservoirs) {
    const ValidationReport rep = validate(network, reservoirs);
    if (!rep.contacts_in_range || !rep.parameters_valid || !rep.mass_symmetric ||
        !rep.mass_positive_definite || !rep.potential_symmetric) {
        fail(ErrorCode::InvalidArgument, rep.issues.front());
    }
    if (!rep.contacts_disjoint) fail(ErrorCode::ContactOverlap, "contact sets overlap");
    if (!rep.potential_positive_definite)
        fail(ErrorCode::UnstableNetwork, "renormalized potential is not positive definite");
}

}  // namespace heatnet
