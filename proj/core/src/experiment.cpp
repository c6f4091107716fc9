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

#include "heatnet/experiment.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "heatnet/error.hpp"

namespace heatnet {

namespace {

const std::vector<double> kDefaultScalingTemperatures{1.05, 0.95};

Cutoff cutoff_for(Regime regime, std::optional<double> value, const Cutoff& fallback) {
    if (regime == Regime::InfiniteCutoff) return Cutoff::infinite();
    if (value) return std::isinf(*value) ? Cutoff::infinite() : Cutoff::finite(*value);
    if (regime == Regime::FiniteCutoff && fallback.is_infinite())
        fail(ErrorCode::ConfigError, "the finite-cutoff regime needs reservoirs.cutoff");
    return fallback;
}

}  // namespace

std::pair<HarmonicNetwork, ReservoirSet> build_system(const ExperimentConfig& config,
                                                      const RunOptions& options) {
    const NetworkSource& src = config.network;
    HarmonicNetwork net;
    ReservoirSet res;
    bool generated = false;
    switch (src.kind) {
        case NetworkSource::Kind::Lattice: {
            LatticeSpec spec = src.lattice;
            if (options.seed) spec.seed = *options.seed;
            net = build_lattice(spec, src.realization).first;
            res = contacts_for_lattice(spec);
            break;
        }
        case NetworkSource::Kind::Matrices:
            net = HarmonicNetwork(src.mass, src.potential);
            break;
        case NetworkSource::Kind::Random: {
            RandomCase rc = random_case(options.seed.value_or(src.random_seed), src.random);
            net = rc.network;
            res = rc.reservoirs;
            generated = true;
            break;
        }
    }
    const ReservoirConfig& rc = config.reservoirs;
    if (rc.contacts) res.contacts = *rc.contacts;
    if (res.contacts.empty()) fail(ErrorCode::ConfigError, "reservoirs.contacts is required");
    if (rc.temperatures) res.temperatures = *rc.temperatures;
    else if (!generated) fail(ErrorCode::ConfigError, "reservoirs.temperatures is required");
    if (rc.gamma0) res.gamma0 = *rc.gamma0;
    else if (!generated) fail(ErrorCode::ConfigError, "reservoirs.gamma0 is required");
    res.cutoff = cutoff_for(config.regime, rc.cutoff, res.cutoff);
    if (res.temperatures.size() != res.contacts.size())
        fail(ErrorCode::ConfigError, "one temperature per contact set is required");
    require_valid(net, res);
    return {net, res};
}

StateResult run_state(const ExperimentConfig& config, const RunOptions& options) {
    const auto [net, res] = build_system(config, options);
    StateResult out;
    out.thermal = config.thermal_model();
    out.validation = validate(net, res);
    CovarianceOptions co;
    co.thermal = out.thermal;
    out.covariance = stationary_covariance(net, res, config.regime, co);
    out.temperatures = local_temperatures(out.covariance, net);
    return out;
}

HeatResult run_heat(const ExperimentConfig& config, const RunOptions& options) {
    const auto [net, res] = build_system(config, options);
    HeatResult out;
    out.thermal = config.thermal_model();
    out.validation = validate(net, res);
    out.currents = heat_currents(net, res, config.regime, {out.thermal});
    if (config.transmission.enabled) {
        const TransmissionConfig& t = config.transmission;
        Eigen::VectorXd grid = Eigen::VectorXd::Constant(1, t.omega_min);
        if (t.points > 1) grid = Eigen::VectorXd::LinSpaced(t.points, t.omega_min, t.omega_max);
        const ReservoirSet tr =
            config.regime == Regime::FiniteCutoff ? res : res.with_cutoff(Cutoff::infinite());
        out.transmission = transmission_spectrum(net, tr, grid);
    }
    return out;
}

VerifyResult run_verify(const ExperimentConfig& config, const RunOptions& options) {
    if (config.regime == Regime::Weak)
        fail(ErrorCode::ConfigError, "verify compares the finite- or infinite-cutoff sums");
    const ThermalModel thermal = config.thermal_model();
    const bool random = config.network.kind == NetworkSource::Kind::Random;
    const int cases = random ? std::max(1, config.verify_cases) : 1;
    const std::uint64_t base = options.seed.value_or(config.network.random_seed);

    VerifyResult out;
    for (int c = 0; c < cases; ++c) {
        RunOptions o = options;
        if (random) o.seed = base + static_cast<std::uint64_t>(c);
        const auto [net, res] = build_system(config, o);
        VerifyCase vc;
        vc.seed = random ? *o.seed : 0;
        vc.regime = config.regime;

        const ModeSet modes = solve_modes(net, res);
        CovarianceOptions co;
        co.thermal = thermal;
        HeatOptions ho{thermal};
        CovarianceBlocks cov;
        HeatCurrentMatrix heat;
        if (config.regime == Regime::FiniteCutoff) {
            cov = covariance_finite_cutoff(modes, net, res, co);
            heat = heat_finite_cutoff(modes, res, ho);
        } else {
            cov = covariance_infinite_cutoff(modes, net, res, co);
            heat = heat_infinite_cutoff(modes, res, ho);
        }
        QuadratureConfig qc = config.quadrature;
        qc.thermal = thermal;
        const OracleCovariance oc = quadrature_covariance(net, res, qc);
        const OracleHeat oh = quadrature_heat(net, res, qc);
        vc.covariance_diagnostics = oc.diagnostics;
        vc.heat_diagnostics = oh.diagnostics;
        auto append = [&](const std::vector<DiscrepancyRow>& rows) {
            vc.rows.insert(vc.rows.end(), rows.begin(), rows.end());
        };
        append(compare_blocks("sigma_xx", cov.sigma_xx, oc.blocks.sigma_xx, config.tolerance));
        append(compare_blocks("sigma_xp", cov.sigma_xp, oc.blocks.sigma_xp, config.tolerance,
                              xp_scale(oc.blocks, net)));
        append(compare_blocks("sigma_pp", cov.sigma_pp, oc.blocks.sigma_pp, config.tolerance));
        append(compare_blocks("heat", heat.pairwise, oh.currents.pairwise, config.tolerance));
        vc.pass = all_pass(vc.rows);
        out.pass = out.pass && vc.pass;
        out.cases.push_back(std::move(vc));
    }
    return out;
}

double lattice_conductance(const LatticeSpec& spec, std::uint64_t realization, double gamma0,
                           Regime regime, std::optional<double> cutoff,
                           const std::vector<double>& temperatures, ThermalModel thermal) {
    const HarmonicNetwork net = build_lattice(spec, realization).first;
    ReservoirSet res = contacts_for_lattice(spec);
    res.temperatures = temperatures.empty() ? kDefaultScalingTemperatures : temperatures;
    if (res.temperatures.size() != 2)
        fail(ErrorCode::ConfigError, "lattice runs need two temperatures");
    res.gamma0 = gamma0;
    res.cutoff = cutoff_for(regime, cutoff, Cutoff::infinite());
    const HeatCurrentMatrix q = heat_currents(net, res, regime, {thermal});
    const double dt = res.temperatures[0] - res.temperatures[1];
    if (dt == 0.0) fail(ErrorCode::ConfigError, "lattice runs need distinct temperatures");
    return q.totals[0] / (static_cast<double>(spec.slab_size()) * dt);
}

ScalingResult run_scaling(const ExperimentConfig& config, const RunOptions& options) {
    if (config.network.kind != NetworkSource::Kind::Lattice)
        fail(ErrorCode::ConfigError, "scaling needs a lattice network");
    if (config.sweep.sizes.empty() || config.sweep.gamma0.empty())
        fail(ErrorCode::ConfigError, "scaling needs sweep.N and sweep.gamma0");
    ScalingResult out;
    out.thermal = config.thermal_model();
    out.regime = config.regime;
    out.temperatures = config.reservoirs.temperatures.value_or(kDefaultScalingTemperatures);
    LatticeSpec base = config.network.lattice;
    if (options.seed) base.seed = *options.seed;
    else if (config.seed) base.seed = config.seed;
    const int r = config.realizations;

    for (double g : config.sweep.gamma0)
        for (int n : config.sweep.sizes) {
            ScalingCell cell;
            cell.gamma0 = g;
            cell.size = n;
            cell.values.assign(static_cast<std::size_t>(r), std::numeric_limits<double>::quiet_NaN());
            cell.errors.assign(static_cast<std::size_t>(r), "");
            out.cells.push_back(std::move(cell));
        }

    const std::size_t tasks = out.cells.size() * static_cast<std::size_t>(r);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= tasks) return;
            ScalingCell& cell = out.cells[t / static_cast<std::size_t>(r)];
            const std::size_t idx = t % static_cast<std::size_t>(r);
            LatticeSpec spec = base;
            spec.edge = cell.size;
            try {
                cell.values[idx] = lattice_conductance(spec, idx, cell.gamma0, config.regime,
                                                       config.reservoirs.cutoff, out.temperatures,
                                                       out.thermal);
            } catch (const Error& e) {
                cell.errors[idx] = std::string(to_string(e.code())) + ": " + e.what();
            }
        }
    };
    int threads = options.threads > 0 ? options.threads
                                      : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, static_cast<int>(tasks)));
    {
        std::vector<std::jthread> pool;
        for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
        worker();
    }

    for (auto& cell : out.cells) {
        double sum = 0.0;
        for (std::size_t i = 0; i < cell.values.size(); ++i) {
            if (!cell.errors[i].empty()) {
                ++cell.failures;
                continue;
            }
            sum += cell.values[i];
            ++cell.count;
        }
        cell.aborted = cell.failures * 5 > r;
        cell.mean = cell.count ? sum / cell.count : std::numeric_limits<double>::quiet_NaN();
        double ss = 0.0;
        for (std::size_t i = 0; i < cell.values.size(); ++i)
            if (cell.errors[i].empty()) ss += (cell.values[i] - cell.mean) * (cell.values[i] - cell.mean);
        cell.stddev = cell.count > 1 ? std::sqrt(ss / (cell.count - 1)) : 0.0;
    }

    for (double g : config.sweep.gamma0) {
        ScalingFit fit;
        fit.gamma0 = g;
        fit.fit_min_size = config.sweep.fit_min_size;
        std::vector<std::pair<double, double>> pts;
        bool blocked = false;
        for (const auto& cell : out.cells) {
            if (cell.gamma0 != g || cell.size < config.sweep.fit_min_size) continue;
            if (cell.aborted || cell.count == 0) {
                blocked = true;
                continue;
            }
            pts.emplace_back(cell.size, cell.mean);
        }
        try {
            if (blocked) fail(ErrorCode::FitDomain, "a cell in the fit window was aborted");
            fit.fit = fit_power_law(pts);
            fit.valid = true;
        } catch (const Error& e) {
            fit.note = std::string(to_string(e.code())) + ": " + e.what();
        }
        out.fits.push_back(fit);
    }
    return out;
}

}  // namespace heatnet
