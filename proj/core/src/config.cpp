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
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "heatnet/error.hpp"
#include "heatnet/experiment.hpp"

namespace heatnet {

namespace {

using json = nlohmann::json;

void check_keys(const json& obj, const std::string& where, std::set<std::string> allowed) {
    if (!obj.is_object()) fail(ErrorCode::ConfigError, where + " must be an object");
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            fail(ErrorCode::ConfigError, "unknown key '" + it.key() + "' in " + where);
}

template <class T>
T get(const json& obj, const std::string& key, const std::string& where) {
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        fail(ErrorCode::ConfigError, where + "." + key + ": " + e.what());
    }
}

template <class T>
void maybe(const json& obj, const std::string& key, const std::string& where, T& out) {
    if (obj.contains(key)) out = get<T>(obj, key, where);
}

Eigen::MatrixXd matrix_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) fail(ErrorCode::ConfigError, where + " must be a nested array");
    const auto rows = static_cast<Eigen::Index>(j.size());
    Eigen::MatrixXd m(rows, rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != rows)
            fail(ErrorCode::ConfigError, where + " must be square");
        for (Eigen::Index c = 0; c < rows; ++c) {
            if (!row[static_cast<std::size_t>(c)].is_number())
                fail(ErrorCode::ConfigError, where + " entries must be numbers");
            m(i, c) = row[static_cast<std::size_t>(c)].get<double>();
        }
    }
    return m;
}

Regime parse_regime(const std::string& s) {
    if (s == "finite_cutoff") return Regime::FiniteCutoff;
    if (s == "infinite_cutoff") return Regime::InfiniteCutoff;
    if (s == "weak") return Regime::Weak;
    fail(ErrorCode::ConfigError, "unknown regime '" + s + "'");
}

Mode parse_mode(const std::string& s) {
    if (s == "state") return Mode::State;
    if (s == "heat") return Mode::Heat;
    if (s == "scaling") return Mode::Scaling;
    if (s == "verify") return Mode::Verify;
    fail(ErrorCode::ConfigError, "unknown mode '" + s + "'");
}

std::string resolve(const std::string& path, const std::string& base) {
    if (base.empty() || std::filesystem::path(path).is_absolute()) return path;
    return (std::filesystem::path(base) / path).string();
}

void parse_network(const json& j, const std::string& base, NetworkSource& out) {
    check_keys(j, "network", {"lattice", "matrices", "random"});
    if (j.size() != 1)
        fail(ErrorCode::ConfigError, "network needs exactly one of lattice, matrices, random");
    if (j.contains("lattice")) {
        const json& l = j["lattice"];
        const std::string w = "network.lattice";
        check_keys(l, w, {"dim", "N", "k0", "coupling", "mass_mean", "mass_spread", "boundary",
                          "realization", "seed"});
        out.kind = NetworkSource::Kind::Lattice;
        maybe(l, "dim", w, out.lattice.dim);
        maybe(l, "N", w, out.lattice.edge);
        maybe(l, "k0", w, out.lattice.pinning);
        maybe(l, "coupling", w, out.lattice.coupling);
        maybe(l, "mass_mean", w, out.lattice.mass_mean);
        maybe(l, "mass_spread", w, out.lattice.mass_spread);
        maybe(l, "realization", w, out.realization);
        maybe(l, "seed", w, out.lattice.seed);
        if (l.contains("boundary")) {
            const auto b = get<std::string>(l, "boundary", w);
            if (b == "fixed") out.lattice.boundary = Boundary::Fixed;
            else if (b == "free") out.lattice.boundary = Boundary::Free;
            else fail(ErrorCode::ConfigError, "boundary must be 'fixed' or 'free'");
        }
    } else if (j.contains("matrices")) {
        const json& m = j["matrices"];
        const std::string w = "network.matrices";
        check_keys(m, w, {"mass", "potential", "mass_file", "potential_file"});
        out.kind = NetworkSource::Kind::Matrices;
        if (m.contains("mass_file"))
            out.mass = read_matrix_file(resolve(get<std::string>(m, "mass_file", w), base));
        else if (m.contains("mass"))
            out.mass = matrix_from_json(m["mass"], w + ".mass");
        else
            fail(ErrorCode::ConfigError, w + " needs mass or mass_file");
        if (m.contains("potential_file"))
            out.potential = read_matrix_file(resolve(get<std::string>(m, "potential_file", w), base));
        else if (m.contains("potential"))
            out.potential = matrix_from_json(m["potential"], w + ".potential");
        else
            fail(ErrorCode::ConfigError, w + " needs potential or potential_file");
    } else {
        const json& r = j["random"];
        const std::string w = "network.random";
        check_keys(r, w, {"size", "seed"});
        out.kind = NetworkSource::Kind::Random;
        maybe(r, "size", w, out.random.size);
        maybe(r, "seed", w, out.random_seed);
    }
}

void parse_reservoirs(const json& j, ReservoirConfig& out) {
    const std::string w = "reservoirs";
    check_keys(j, w, {"contacts", "temperatures", "gamma0", "cutoff"});
    if (j.contains("contacts")) out.contacts = get<std::vector<std::vector<int>>>(j, "contacts", w);
    if (j.contains("temperatures")) out.temperatures = get<std::vector<double>>(j, "temperatures", w);
    if (j.contains("gamma0")) out.gamma0 = get<double>(j, "gamma0", w);
    if (j.contains("cutoff")) {
        const json& c = j["cutoff"];
        if (c.is_string() && c.get<std::string>() == "infinite")
            out.cutoff = std::numeric_limits<double>::infinity();
        else if (c.is_number())
            out.cutoff = c.get<double>();
        else
            fail(ErrorCode::ConfigError, "reservoirs.cutoff must be a number or \"infinite\"");
    }
}

}  // namespace

std::string to_string(Mode m) {
    switch (m) {
        case Mode::State: return "state";
        case Mode::Heat: return "heat";
        case Mode::Scaling: return "scaling";
        case Mode::Verify: return "verify";
    }
    return "unknown";
}

ThermalModel ExperimentConfig::thermal_model() const {
    if (thermal) return *thermal;
    return mode == Mode::Scaling ? ThermalModel::Classical : ThermalModel::Quantum;
}

ExperimentConfig parse_config(const std::string& text, const std::string& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorCode::ConfigError, std::string("malformed configuration: ") + e.what());
    }
    check_keys(j, "configuration",
               {"mode", "regime", "thermal", "network", "reservoirs", "ensemble", "sweep",
                "transmission", "quadrature", "tolerance", "verify_cases"});
    ExperimentConfig c;
    if (j.contains("mode")) c.mode = parse_mode(get<std::string>(j, "mode", "configuration"));
    if (j.contains("regime")) c.regime = parse_regime(get<std::string>(j, "regime", "configuration"));
    if (j.contains("thermal")) {
        const auto t = get<std::string>(j, "thermal", "configuration");
        if (t == "quantum") c.thermal = ThermalModel::Quantum;
        else if (t == "classical") c.thermal = ThermalModel::Classical;
        else fail(ErrorCode::ConfigError, "thermal must be 'quantum' or 'classical'");
    }
    if (!j.contains("network")) fail(ErrorCode::ConfigError, "configuration needs a network");
    parse_network(j["network"], base_dir, c.network);
    if (j.contains("reservoirs")) parse_reservoirs(j["reservoirs"], c.reservoirs);
    if (j.contains("ensemble")) {
        const json& e = j["ensemble"];
        check_keys(e, "ensemble", {"realizations", "seed"});
        maybe(e, "realizations", "ensemble", c.realizations);
        maybe(e, "seed", "ensemble", c.seed);
        if (c.realizations < 1) fail(ErrorCode::ConfigError, "ensemble.realizations must be >= 1");
    }
    if (j.contains("sweep")) {
        const json& s = j["sweep"];
        check_keys(s, "sweep", {"N", "gamma0", "fit_min_N"});
        maybe(s, "N", "sweep", c.sweep.sizes);
        maybe(s, "gamma0", "sweep", c.sweep.gamma0);
        maybe(s, "fit_min_N", "sweep", c.sweep.fit_min_size);
    }
    if (j.contains("transmission")) {
        const json& t = j["transmission"];
        check_keys(t, "transmission", {"omega_min", "omega_max", "points"});
        c.transmission.enabled = true;
        c.transmission.omega_min = get<double>(t, "omega_min", "transmission");
        c.transmission.omega_max = get<double>(t, "omega_max", "transmission");
        c.transmission.points = get<int>(t, "points", "transmission");
        if (c.transmission.points < 1 || !(c.transmission.omega_max >= c.transmission.omega_min))
            fail(ErrorCode::ConfigError, "transmission grid is empty");
    }
    if (j.contains("quadrature")) {
        const json& q = j["quadrature"];
        check_keys(q, "quadrature",
                   {"rel_tol", "abs_tol", "component_floor", "max_subdivisions",
                    "omega_max_multiplier"});
        maybe(q, "rel_tol", "quadrature", c.quadrature.rel_tol);
        maybe(q, "abs_tol", "quadrature", c.quadrature.abs_tol);
        maybe(q, "component_floor", "quadrature", c.quadrature.component_floor);
        maybe(q, "max_subdivisions", "quadrature", c.quadrature.max_subdivisions);
        maybe(q, "omega_max_multiplier", "quadrature", c.quadrature.omega_max_multiplier);
    }
    if (j.contains("tolerance")) {
        const json& t = j["tolerance"];
        check_keys(t, "tolerance", {"relative", "small_relative", "small_threshold"});
        maybe(t, "relative", "tolerance", c.tolerance.relative);
        maybe(t, "small_relative", "tolerance", c.tolerance.small_relative);
        maybe(t, "small_threshold", "tolerance", c.tolerance.small_threshold);
    }
    maybe(j, "verify_cases", "configuration", c.verify_cases);

    if (c.mode == Mode::Scaling) {
        if (c.network.kind != NetworkSource::Kind::Lattice)
            fail(ErrorCode::ConfigError, "scaling needs a lattice network");
        if (c.sweep.sizes.empty() || c.sweep.gamma0.empty())
            fail(ErrorCode::ConfigError, "scaling needs sweep.N and sweep.gamma0");
    }
    return c;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open configuration " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), std::filesystem::path(path).parent_path().string());
}

}  // namespace heatnet
