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

#ifndef QDCOST_CLI_COMMANDS_H
#define QDCOST_CLI_COMMANDS_H

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qdcost/costmodel.h"

namespace qdcost::cli {

inline constexpr const char *kToolVersion = "0.1.0";

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitConfigError = 2;

/// Invalid user configuration; maps to kExitConfigError.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Json };

/// Which odd d in [d_min, d_max] a command visits when the user does not say.
enum class DimensionFilter { Primes, AllOdd };

struct RunConfig {
    double phi_max = 1.0;
    double eps = 1e-6;
    double t = 0.1;
    std::optional<std::size_t> d_min;
    std::optional<std::size_t> d_max;
    std::optional<DimensionFilter> filter;
    std::size_t k = 2;
    OutputFormat format = OutputFormat::Csv;
    std::string out;
    SynthesisModel model;
    std::size_t dense_cap = 64;
    std::size_t census_cap = 513;
    double perturb_select = 0;
    std::size_t threads = 0;  // 0 = hardware concurrency

    /// Throws ConfigError on out-of-range values.
    void validate() const;
};

/// Overlays the keys present in a JSON config file onto `config`.
/// Unknown keys and malformed values throw ConfigError.
void load_config_file(const std::string &path, RunConfig &config);

/// Environment variable naming the config file used when --config is absent.
inline constexpr const char *kConfigEnvVar = "QDCOST_CONFIG";

/// Odd dimensions visited by a command. Throws ConfigError("empty scan range") if none.
std::vector<std::size_t> scan_dimensions(
    const RunConfig &config, std::size_t default_min, std::size_t default_max, DimensionFilter default_filter);

bool is_prime(std::size_t n);

/// One output table. Cells are integers, reals, booleans or strings.
using Cell = std::variant<long long, double, bool, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// CSV with reals at 9 significant digits.
void write_csv(const Table &table, std::ostream &out);
/// {"meta": {...}, "rows": [...]} with reals in round-trip form.
void write_json(const Table &table, const RunConfig &config, const std::string &command, std::ostream &out);

Table cmd_pf_thresholds(const RunConfig &config);
Table cmd_lcu_table(const RunConfig &config);
Table cmd_scan_ratio(const RunConfig &config);

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    double max_error = 0;
    std::string detail;
    bool passed() const { return failures == 0; }
};

std::vector<SuiteResult> run_verification(const RunConfig &config);
Table verification_table(const std::vector<SuiteResult> &results);

/// Runs `command` and writes its output to config.out (or `out` when empty).
/// Returns the process exit code; config errors are reported on `err`.
int run_command(const std::string &command, const RunConfig &config, std::ostream &out, std::ostream &err);

}  // namespace qdcost::cli

#endif
