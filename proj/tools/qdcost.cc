// Copyright 2026 The qdcost Authors
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
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qdcost/cli/commands.h"

namespace {

using qdcost::cli::RunConfig;

// Flag values are kept optional so that a config file can fill whatever the
// command line leaves unset.
struct Flags {
    std::optional<std::string> config_path;
    std::optional<double> phi_max;
    std::optional<double> eps;
    std::optional<double> t;
    std::optional<std::size_t> d_min;
    std::optional<std::size_t> d_max;
    bool all_odd = false;
    bool primes = false;
    std::optional<std::size_t> k;
    std::optional<std::string> format;
    std::optional<std::string> out;
    std::optional<double> rz_slope;
    std::optional<double> rz_intercept;
    std::optional<std::size_t> dense_cap;
    std::optional<std::size_t> census_cap;
    std::optional<double> perturb_select;
    std::optional<std::size_t> threads;
};

void add_shared_flags(CLI::App &sub, Flags &f) {
    sub.add_option("--config", f.config_path, "JSON config file (default: $QDCOST_CONFIG)");
    sub.add_option("--phi-max", f.phi_max, "Field truncation amplitude");
    auto *eps = sub.add_option("--eps", f.eps, "Target precision");
    sub.add_option("--eps-sim", f.eps, "Alias of --eps")->excludes(eps);
    sub.add_option("--t", f.t, "Evolution time");
    sub.add_option("--d-min", f.d_min, "Smallest local dimension");
    sub.add_option("--d-max", f.d_max, "Largest local dimension");
    auto *all_odd = sub.add_flag("--all-odd", f.all_odd, "Visit every odd d");
    sub.add_flag("--primes", f.primes, "Visit prime d only")->excludes(all_odd);
    sub.add_option("--k", f.k, "Directional code switches per query");
    sub.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub.add_option("--out", f.out, "Output path (default: stdout)");
    sub.add_option("--rz-slope", f.rz_slope, "R_z synthesis slope");
    sub.add_option("--rz-intercept", f.rz_intercept, "R_z synthesis intercept");
    sub.add_option("--dense-cap", f.dense_cap, "Largest d for dense verification suites");
    sub.add_option("--census-cap", f.census_cap, "Largest d for coefficient and census suites");
    sub.add_option("--threads", f.threads, "Worker threads (0 = all cores)");
}

RunConfig resolve(const Flags &f) {
    RunConfig config;
    std::optional<std::string> path = f.config_path;
    if (!path) {
        if (const char *env = std::getenv(qdcost::cli::kConfigEnvVar); env && *env) {
            path = env;
        }
    }
    if (path) {
        qdcost::cli::load_config_file(*path, config);
    }
    if (f.phi_max) config.phi_max = *f.phi_max;
    if (f.eps) config.eps = *f.eps;
    if (f.t) config.t = *f.t;
    if (f.d_min) config.d_min = f.d_min;
    if (f.d_max) config.d_max = f.d_max;
    if (f.all_odd) config.filter = qdcost::cli::DimensionFilter::AllOdd;
    if (f.primes) config.filter = qdcost::cli::DimensionFilter::Primes;
    if (f.k) config.k = *f.k;
    if (f.format) {
        config.format = *f.format == "json" ? qdcost::cli::OutputFormat::Json : qdcost::cli::OutputFormat::Csv;
    }
    if (f.out) config.out = *f.out;
    if (f.rz_slope) config.model.rz_slope = *f.rz_slope;
    if (f.rz_intercept) config.model.rz_intercept = *f.rz_intercept;
    if (f.dense_cap) config.dense_cap = *f.dense_cap;
    if (f.census_cap) config.census_cap = *f.census_cap;
    if (f.perturb_select) config.perturb_select = *f.perturb_select;
    if (f.threads) config.threads = *f.threads;
    return config;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Qubit vs qudit resource estimates for a truncated phi^2 term"};
    app.set_version_flag("--version", qdcost::cli::kToolVersion);
    app.require_subcommand(1);

    Flags flags;
    struct Command {
        const char *name;
        const char *help;
    };
    const Command commands[] = {
        {"pf-thresholds", "Product-formula break-even synthesis prefactors"},
        {"lcu-table", "End-to-end LCU break-even synthesis prefactors"},
        {"scan-ratio", "Qubit/qudit T-count ratio and code-switch budget per d"},
        {"verify", "Run the decomposition and coefficient verification suites"},
    };
    for (const auto &command : commands) {
        auto *sub = app.add_subcommand(command.name, command.help);
        add_shared_flags(*sub, flags);
        if (std::string(command.name) == "verify") {
            sub->add_option("--perturb-select", flags.perturb_select, "Add this angle to the first SELECT rotation")
                ->group("Testing");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : qdcost::cli::kExitConfigError;
    }

    std::string name;
    for (const auto *sub : app.get_subcommands()) {
        name = sub->get_name();
    }
    RunConfig config;
    try {
        config = resolve(flags);
    } catch (const qdcost::cli::ConfigError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return qdcost::cli::kExitConfigError;
    }
    return qdcost::cli::run_command(name, config, std::cout, std::cerr);
}
