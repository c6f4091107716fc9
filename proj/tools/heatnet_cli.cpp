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

// heatnet command-line driver.
//
//   heatnet <state|heat|scaling|verify> --config FILE [--out DIR] [--threads N]
//           [--deterministic] [--seed S]
//
// Without --out the JSON document goes to stdout. Exit codes: 0 success,
// 1 verification failed, 2 usage or configuration error, 3 numerical or
// I/O failure. Errors are reported on stderr as "error: CODE: message".

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "heatnet/error.hpp"
#include "heatnet/experiment.hpp"
#include "heatnet/output.hpp"

namespace fs = std::filesystem;
using namespace heatnet;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kRuntime = 3;

struct Emitter {
    std::optional<fs::path> dir;

    void file(const std::string& name, const std::string& content, bool primary) const {
        if (dir) {
            write_text_file((*dir / name).string(), content);
        } else if (primary) {
            std::cout << content;
        }
    }
};

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument:
        case ErrorCode::ConfigError:
            return kUsage;
        case ErrorCode::VerificationFailed:
            return kVerifyFailed;
        default:
            return kRuntime;
    }
}

Mode parse_mode_name(const std::string& verb) {
    if (verb == "state") return Mode::State;
    if (verb == "heat") return Mode::Heat;
    if (verb == "scaling") return Mode::Scaling;
    return Mode::Verify;
}

int run(const std::string& verb, const ExperimentConfig& config, const RunOptions& options,
        const Emitter& out) {
    if (verb == "state") {
        const StateResult r = run_state(config, options);
        out.file("state.json", state_json(r), true);
        return 0;
    }
    if (verb == "heat") {
        const HeatResult r = run_heat(config, options);
        out.file("heat.json", heat_json(r), true);
        out.file("heat.csv", heat_csv(r.currents), false);
        if (r.transmission) out.file("transmission.csv", transmission_csv(*r.transmission), false);
        return 0;
    }
    if (verb == "scaling") {
        const ScalingResult r = run_scaling(config, options);
        out.file("scaling.json", scaling_json(r), true);
        out.file("scaling.csv", scaling_csv(r), false);
        return 0;
    }
    const VerifyResult r = run_verify(config, options);
    out.file("verify.json", verify_json(r), true);
    if (!r.pass) {
        std::cerr << "error: " << to_string(ErrorCode::VerificationFailed)
                  << ": at least one entry exceeds the tolerance\n";
        return kVerifyFailed;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stationary states and heat currents of harmonic networks"};
    app.require_subcommand(1, 1);

    std::string config_path;
    std::string out_dir;
    int threads = 1;
    bool deterministic = false;
    std::optional<std::uint64_t> seed;

    for (const char* verb : {"state", "heat", "scaling", "verify"}) {
        CLI::App* sub = app.add_subcommand(verb);
        sub->add_option("--config", config_path, "experiment configuration (JSON)")->required();
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--threads", threads, "worker threads for ensembles")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--deterministic", deterministic, "fixed-order reductions");
        sub->add_option("--seed", seed, "overrides the configured seed");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }
    const std::string verb = app.get_subcommands().front()->get_name();

    try {
        ExperimentConfig config = load_config(config_path);
        config.mode = parse_mode_name(verb);
        const RunOptions options{threads, deterministic, seed};
        Emitter out;
        if (!out_dir.empty()) {
            fs::create_directories(out_dir);
            out.dir = fs::path(out_dir);
        }
        return run(verb, config, options, out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << to_string(ErrorCode::IoError) << ": " << e.what() << "\n";
        return kRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: INTERNAL: " << e.what() << "\n";
        return kRuntime;
    }
}
