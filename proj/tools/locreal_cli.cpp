// Copyright 2026 The locreal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "locreal/errors.h"
#include "locreal/runner.h"
#include "locreal/scenario.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitInvariant = 3;

unsigned default_jobs() {
    if (const char* env = std::getenv("LOCREAL_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid LOCREAL_JOBS=" << env << "\n";
    }
    return 1;
}

int execute(const std::string& command, const std::string& scenario_path, const std::string& out_path,
            const std::string& format, const locreal::RunOptions& options) {
    const locreal::Command cmd = locreal::parse_command(command);
    const locreal::Scenario scenario = locreal::load_scenario(scenario_path);
    const locreal::RunResult result = locreal::run(cmd, scenario, options);

    std::string text;
    if (format == "csv" && cmd != locreal::Command::validate) {
        text = locreal::to_csv(result.rows);
    } else {
        text = result.document.dump(2) + "\n";
    }
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out || !(out << text)) {
            throw locreal::ValidationError(out_path + ": cannot write output");
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bell/CHSH inequality checker for information-model and quantum scenarios"};
    std::string command;
    std::string scenario_path;
    std::string out_path;
    std::string format = "json";
    double tol = 0;
    std::uint64_t seed = 0;
    unsigned jobs = default_jobs();

    app.add_option("command", command, "validate | check | search | simulate")
        ->required()
        ->check(CLI::IsMember({"validate", "check", "search", "simulate"}));
    app.add_option("--scenario", scenario_path, "Scenario JSON file")->required();
    app.add_option("--out", out_path, "Output file (default stdout)");
    app.add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    auto* tol_opt = app.add_option("--tol", tol, "Report tolerance (default: scenario value, else 1e-9)")
                        ->check(CLI::NonNegativeNumber);
    auto* seed_opt = app.add_option("--seed", seed, "Base seed for simulate and search");
    app.add_option("--jobs", jobs, "Worker threads (default LOCREAL_JOBS or 1)")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    locreal::RunOptions options;
    if (tol_opt->count() > 0) {
        options.tol = tol;
    }
    if (seed_opt->count() > 0) {
        options.seed = seed;
    }
    options.jobs = jobs;

    try {
        return execute(command, scenario_path, out_path, format, options);
    } catch (const locreal::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const locreal::HypothesisError& e) {
        std::cerr << "hypothesis not met: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const locreal::InvariantError& e) {
        std::cerr << "invariant breach: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
}
