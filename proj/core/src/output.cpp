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

#include "heatnet/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "heatnet/error.hpp"

namespace heatnet {

namespace {

using json = nlohmann::ordered_json;

// NaN and infinities are not JSON numbers; they become null.
json number(double x) {
    if (!std::isfinite(x)) return nullptr;
    return x;
}

json matrix(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(number(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json vector(const Eigen::VectorXd& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(number(v[i]));
    return out;
}

json validation(const ValidationReport& r) {
    json j;
    j["ok"] = r.ok();
    j["contact_rank"] = r.contact_rank;
    j["lambda_pole_multiplicity"] = r.lambda_pole_multiplicity;
    j["mass_commutes_with_contacts"] = r.mass_commutes_with_contacts;
    j["issues"] = r.issues;
    return j;
}

json currents(const HeatCurrentMatrix& q) {
    json j;
    j["regime"] = to_string(q.regime);
    j["pairwise"] = matrix(q.pairwise);
    j["totals"] = vector(q.totals);
    j["conservation_error"] = number(q.conservation_error());
    j["imag_residue"] = number(q.imag_residue);
    if (!q.mode_contributions.empty()) {
        json modes = json::array();
        for (const auto& m : q.mode_contributions) modes.push_back(matrix(m));
        j["mode_contributions"] = modes;
    }
    return j;
}

json diagnostics(const QuadratureDiagnostics& d) {
    json j;
    j["omega_max"] = number(d.omega_max);
    j["tail_magnitude"] = number(d.tail_magnitude);
    j["error_estimate"] = number(d.error_estimate);
    j["intervals"] = d.intervals;
    j["evaluations"] = d.evaluations;
    j["converged"] = d.converged;
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string heat_csv(const HeatCurrentMatrix& q) {
    std::ostringstream os;
    os << "l,l_prime,value\n";
    for (Eigen::Index l = 0; l < q.pairwise.rows(); ++l)
        for (Eigen::Index lp = 0; lp < q.pairwise.cols(); ++lp)
            if (l != lp) os << l << ',' << lp << ',' << format_double(q.pairwise(l, lp)) << '\n';
    return os.str();
}

std::string transmission_csv(const TransmissionSpectrum& t) {
    std::ostringstream os;
    os << "omega,l,l_prime,value\n";
    for (std::size_t k = 0; k < t.values.size(); ++k) {
        const auto& v = t.values[k];
        const std::string w = format_double(t.frequencies[static_cast<Eigen::Index>(k)]);
        for (Eigen::Index l = 0; l < v.rows(); ++l)
            for (Eigen::Index lp = 0; lp < v.cols(); ++lp)
                if (l != lp) os << w << ',' << l << ',' << lp << ',' << format_double(v(l, lp)) << '\n';
    }
    return os.str();
}

std::string scaling_csv(const ScalingResult& r) {
    std::ostringstream os;
    os << "gamma0,N,realization,J_over_dT\n";
    for (const auto& c : r.cells)
        for (std::size_t i = 0; i < c.values.size(); ++i)
            os << format_double(c.gamma0) << ',' << c.size << ',' << i << ','
               << format_double(c.values[i]) << '\n';
    return os.str();
}

std::string state_json(const StateResult& r) {
    json j;
    j["kind"] = "state";
    j["regime"] = to_string(r.covariance.regime);
    j["thermal"] = to_string(r.thermal);
    j["sigma_xx"] = matrix(r.covariance.sigma_xx);
    j["sigma_xp"] = matrix(r.covariance.sigma_xp);
    j["sigma_pp"] = matrix(r.covariance.sigma_pp);
    j["pp_low_T_valid"] = r.covariance.pp_low_T_valid;
    j["imag_residue"] = number(r.covariance.imag_residue);
    j["local_temperatures"] = vector(r.temperatures.values);
    j["local_temperatures_high_t_only"] = r.temperatures.high_t_only;
    j["validation"] = validation(r.validation);
    return dump(j);
}

std::string heat_json(const HeatResult& r) {
    json j;
    j["kind"] = "heat";
    j["thermal"] = to_string(r.thermal);
    j["currents"] = currents(r.currents);
    j["validation"] = validation(r.validation);
    j["transmission_points"] = r.transmission ? r.transmission->values.size() : 0;
    return dump(j);
}

std::string scaling_json(const ScalingResult& r) {
    json j;
    j["kind"] = "scaling";
    j["regime"] = to_string(r.regime);
    j["thermal"] = to_string(r.thermal);
    json temps = json::array();
    for (double t : r.temperatures) temps.push_back(number(t));
    j["temperatures"] = temps;
    json cells = json::array();
    for (const auto& c : r.cells) {
        json cj;
        cj["gamma0"] = number(c.gamma0);
        cj["N"] = c.size;
        cj["mean_J_over_dT"] = number(c.mean);
        cj["stddev"] = number(c.stddev);
        cj["count"] = c.count;
        cj["failures"] = c.failures;
        cj["aborted"] = c.aborted;
        json errs = json::array();
        for (std::size_t i = 0; i < c.errors.size(); ++i)
            if (!c.errors[i].empty()) errs.push_back({{"realization", i}, {"error", c.errors[i]}});
        cj["errors"] = errs;
        cells.push_back(cj);
    }
    j["cells"] = cells;
    json fits = json::array();
    for (const auto& f : r.fits) {
        json fj;
        fj["gamma0"] = number(f.gamma0);
        fj["valid"] = f.valid;
        fj["fit_min_N"] = f.fit_min_size;
        if (f.valid) {
            fj["slope"] = number(f.fit.slope);
            fj["mu_fit"] = number(f.fit.mu_fit);
            fj["std_error"] = number(f.fit.std_error);
            fj["points"] = f.fit.points;
        } else {
            fj["note"] = f.note;
        }
        fits.push_back(fj);
    }
    j["fits"] = fits;
    return dump(j);
}

std::string verify_json(const VerifyResult& r) {
    json j;
    j["kind"] = "verify";
    j["pass"] = r.pass;
    json cases = json::array();
    for (const auto& c : r.cases) {
        json cj;
        cj["seed"] = c.seed;
        cj["regime"] = to_string(c.regime);
        cj["pass"] = c.pass;
        std::size_t failed = 0;
        double worst = 0.0;
        for (const auto& row : c.rows) {
            if (!row.pass) ++failed;
            worst = std::max(worst, row.rel_error / row.tolerance);
        }
        cj["rows"] = c.rows.size();
        cj["failed_rows"] = failed;
        cj["worst_error_over_tolerance"] = number(worst);
        cj["covariance_quadrature"] = diagnostics(c.covariance_diagnostics);
        cj["heat_quadrature"] = diagnostics(c.heat_diagnostics);
        cases.push_back(cj);
    }
    j["cases"] = cases;
    return dump(j);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::IoError, "cannot write " + path);
    out << content;
    if (!out) fail(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace heatnet
