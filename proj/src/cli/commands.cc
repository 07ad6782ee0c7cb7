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

#include "qdcost/cli/commands.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <thread>

#include "json.hpp"
#include "qdcost/endtoend.h"
#include "qdcost/grid.h"
#include "qdcost/lcu.h"
#include "qdcost/pauli.h"
#include "qdcost/simverify.h"
#include "qdcost/trotter.h"

namespace qdcost::cli {

namespace {

constexpr double kOracleTolerance = 1e-10;
constexpr double kNormTolerance = 1e-12;
constexpr std::size_t kProjectorMaxQubits = 8;
constexpr double kTrotterTimes[] = {0.1, 1.0, 3.7};

// Evaluates f over `inputs` on a small worker pool. Results keep input order;
// the first exception (in input order) is rethrown.
template <typename F>
auto parallel_map(const std::vector<std::size_t> &inputs, std::size_t threads, F f) {
    using Result = decltype(f(inputs.front()));
    std::vector<std::optional<Result>> slots(inputs.size());
    std::vector<std::exception_ptr> errors(inputs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < inputs.size(); i = next++) {
            try {
                slots[i].emplace(f(inputs[i]));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, inputs.size());
    std::vector<std::thread> pool;
    for (std::size_t i = 1; i < threads; ++i) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &thread : pool) {
        thread.join();
    }
    std::vector<Result> out;
    out.reserve(inputs.size());
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (errors[i]) {
            std::rethrow_exception(errors[i]);
        }
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

std::vector<std::size_t> odd_range(std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> out;
    for (std::size_t d = 3; d <= hi; d += 2) {
        if (d >= lo) {
            out.push_back(d);
        }
    }
    return out;
}

CostOptions cost_options(const RunConfig &config) {
    CostOptions options;
    options.model = config.model;
    return options;
}

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

const char *format_name(OutputFormat format) {
    return format == OutputFormat::Csv ? "csv" : "json";
}

const char *filter_name(DimensionFilter filter) {
    return filter == DimensionFilter::Primes ? "primes" : "all-odd";
}

void note_error(SuiteResult &suite, double error, double tol) {
    suite.cases++;
    if (!(error < tol)) {
        suite.failures++;
    }
    if (std::isnan(error)) {
        suite.max_error = error;
    } else if (!std::isnan(suite.max_error)) {
        suite.max_error = std::max(suite.max_error, error);
    }
}

void note_check(SuiteResult &suite, bool ok) {
    suite.cases++;
    if (!ok) {
        suite.failures++;
    }
}

std::vector<double> trotter_target(const FieldGrid &grid, double t) {
    const double mu = squared_mean(grid);
    std::vector<double> target;
    for (double lambda : grid.lambdas()) {
        target.push_back(-t * (lambda * lambda - mu));
    }
    return target;
}

SuiteResult trotter_suite(const RunConfig &config) {
    SuiteResult suite;
    suite.name = "trotter";
    for (std::size_t d : odd_range(3, config.dense_cap)) {
        const auto grid = make_grid(config.phi_max, d);
        for (double t : kTrotterTimes) {
            const auto schedule = qudit_trotter_angles(grid, t);
            note_check(suite, schedule.size() == d - 1 && schedule.all_adjacent() && schedule.all_on_axis(Axis::Z));
            const auto got = apply_z_schedule(schedule);
            note_error(suite, equal_up_to_global_phase(got, {trotter_target(grid, t)}, kOracleTolerance).max_error,
                       kOracleTolerance);

            const auto expansion = qubit_trotter_terms(grid, t);
            note_check(suite, expansion.linear_terms.size() + expansion.quad_terms.size() == expansion.rz_count);
            DiagPhases qubit_target;
            for (std::size_t n = 0; n < (std::size_t{1} << grid.n_b()); ++n) {
                const double phi = expansion.field_eigenvalue(n);
                qubit_target.phases.push_back(-t * phi * phi);
            }
            const auto qubit_got = apply_qubit_z_terms(expansion);
            note_error(suite, equal_up_to_global_phase(qubit_got, qubit_target, kOracleTolerance).max_error,
                       kOracleTolerance);
        }
    }
    return suite;
}

SuiteResult select_suite(const RunConfig &config) {
    SuiteResult suite;
    suite.name = "select";
    for (std::size_t d : odd_range(3, config.dense_cap)) {
        const auto expansion = beta_closed_form(make_grid(config.phi_max, d));
        const auto closed = fixed_encoding_select_schedule(expansion);
        auto rotations = closed.rotations();
        if (config.perturb_select != 0 && !rotations.empty()) {
            rotations.front().angle += config.perturb_select;
        }
        const RotationSchedule schedule(closed.dim(), rotations, closed.global_phase());
        const DiagPhases target{select_diag_phases(expansion)};
        note_error(suite, equal_up_to_global_phase(apply_z_schedule(schedule), target, kOracleTolerance).max_error,
                   kOracleTolerance);
        const auto direct = select_schedule_direct(expansion);
        note_error(
            suite, equal_up_to_global_phase(apply_z_schedule(direct), target, kOracleTolerance).max_error,
            kOracleTolerance);
        note_check(suite, schedule.nontrivial_count() == select_nontrivial_count(d));
    }
    return suite;
}

SuiteResult prep_suite(const RunConfig &config) {
    SuiteResult suite;
    suite.name = "prep";
    for (std::size_t d : odd_range(3, config.dense_cap)) {
        const auto expansion = beta_closed_form(make_grid(config.phi_max, d));
        const auto schedule = prep_ry_schedule(expansion);
        note_check(suite, schedule.size() == d - 1 && schedule.all_on_axis(Axis::Y));
        const auto state =
            apply_schedule_to_state(DenseState::basis(d, 0, config.dense_cap), schedule);
        note_error(suite, std::abs(state.norm() - 1), kNormTolerance);
        note_error(suite, l2_distance(state, prep_target_amplitudes(expansion)), kOracleTolerance);
    }
    return suite;
}

SuiteResult projector_suite(const RunConfig &config) {
    SuiteResult suite;
    suite.name = "projector-diag";
    for (std::size_t n_b = 2; n_b <= kProjectorMaxQubits; ++n_b) {
        // Smallest and largest odd d that need exactly n_b qubits.
        for (std::size_t d : {(std::size_t{1} << (n_b - 1)) + 1, (std::size_t{1} << n_b) - 1}) {
            const auto grid = make_grid(config.phi_max, d);
            const SignedBinaryRegister reg(n_b);
            const auto diag = qubit_projector_diag_oracle(grid);
            const double delta2 = grid.delta_phi() * grid.delta_phi();
            double largest = 0;
            for (std::size_t s = 0; s < reg.string_count(); ++s) {
                const auto label = reg.label(s);
                const double expected = delta2 * static_cast<double>(label * label);
                note_check(suite, diag[s] == expected);
                suite.max_error = std::max(suite.max_error, std::abs(diag[s] - expected));
                largest = std::max(largest, diag[s]);
            }
            note_check(suite, largest == qubit_lcu_normalization(grid));
        }
    }
    return suite;
}

SuiteResult dft_suite(const RunConfig &config) {
    SuiteResult suite;
    suite.name = "dft";
    const auto dims = odd_range(3, config.census_cap);
    const auto per_d = parallel_map(dims, config.threads, [&](std::size_t d) {
        SuiteResult local;
        const auto grid = make_grid(config.phi_max, d);
        const auto closed = beta_closed_form(grid);
        const auto oracle = beta_dft_oracle(grid);
        double worst = 0;
        for (std::size_t r = 0; r < d; ++r) {
            worst = std::max(worst, std::abs(closed.betas[r] - oracle.betas[r]));
        }
        note_error(local, worst, kOracleTolerance);
        double hermitian = 0;
        for (std::size_t r = 1; r < d; ++r) {
            hermitian = std::max(hermitian, std::abs(closed.betas[d - r] - std::conj(closed.betas[r])));
        }
        note_error(local, hermitian, kOracleTolerance);
        bool signs = true;
        for (std::size_t r = 1; r < d; ++r) {
            signs = signs && ((closed.c_amp(r) < 0) == (r >= closed.sign_threshold)) &&
                    ((oracle.c_amp(r) < 0) == (r >= oracle.sign_threshold));
        }
        note_check(local, signs);
        return local;
    });
    for (const auto &local : per_d) {
        suite.cases += local.cases;
        suite.failures += local.failures;
        suite.max_error = std::max(suite.max_error, local.max_error);
    }
    return suite;
}

SuiteResult census_suite(const RunConfig &config) {
    SuiteResult suite;
    suite.name = "census";
    const auto dims = odd_range(3, config.census_cap);
    const auto counts = parallel_map(dims, config.threads, [&](std::size_t d) {
        const auto exact = select_nontrivial_count(d);
        const auto direct = select_schedule_direct(beta_closed_form(make_grid(config.phi_max, d)));
        return std::pair<std::size_t, bool>{exact, direct.nontrivial_count() == exact};
    });
    std::map<std::size_t, std::size_t> deficits;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        const std::size_t d = dims[i];
        const auto [s, agrees] = counts[i];
        note_check(suite, agrees);
        const std::size_t deficit = d - s;
        note_check(suite, deficit == 1 || deficit == 2 || deficit == 4);
        deficits[deficit]++;
    }
    for (const auto &[deficit, count] : deficits) {
        if (!suite.detail.empty()) {
            suite.detail += ' ';
        }
        suite.detail += "d-" + std::to_string(deficit) + ":" + std::to_string(count);
    }
    return suite;
}

nlohmann::json config_json(const RunConfig &config) {
    nlohmann::json j;
    j["phi_max"] = config.phi_max;
    j["eps"] = config.eps;
    j["t"] = config.t;
    if (config.d_min) {
        j["d_min"] = *config.d_min;
    }
    if (config.d_max) {
        j["d_max"] = *config.d_max;
    }
    if (config.filter) {
        j["filter"] = filter_name(*config.filter);
    }
    j["k"] = config.k;
    j["format"] = format_name(config.format);
    j["rz_slope"] = config.model.rz_slope;
    j["rz_intercept"] = config.model.rz_intercept;
    j["dense_cap"] = config.dense_cap;
    j["census_cap"] = config.census_cap;
    if (config.perturb_select != 0) {
        j["perturb_select"] = config.perturb_select;
    }
    return j;
}

nlohmann::json cell_json(const Cell &cell) {
    return std::visit([](const auto &v) { return nlohmann::json(v); }, cell);
}

std::string cell_csv(const Cell &cell) {
    struct {
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_real(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string &v) const { return v; }
    } visitor;
    return std::visit(visitor, cell);
}

long long as_int(std::size_t v) {
    return static_cast<long long>(v);
}

}  // namespace

void RunConfig::validate() const {
    if (!(phi_max > 0) || !std::isfinite(phi_max)) {
        throw ConfigError("phi-max must be positive and finite");
    }
    if (!(eps > 0 && eps < 1)) {
        throw ConfigError("eps must lie in (0, 1)");
    }
    if (!(t >= 0) || !std::isfinite(t)) {
        throw ConfigError("t must be non-negative and finite");
    }
    if (k == 0) {
        throw ConfigError("k must be at least 1");
    }
    if (d_min && d_max && *d_min > *d_max) {
        throw ConfigError("empty scan range");
    }
    if (dense_cap < 3 || dense_cap > kDenseDimensionCap) {
        throw ConfigError("dense-cap must lie in [3, " + std::to_string(kDenseDimensionCap) + "]");
    }
    if (census_cap < 3 || census_cap > 513) {
        throw ConfigError("census-cap must lie in [3, 513]");
    }
    if (!std::isfinite(perturb_select)) {
        throw ConfigError("perturb-select must be finite");
    }
    try {
        model.validate();
    } catch (const std::domain_error &e) {
        throw ConfigError(e.what());
    }
}

void load_config_file(const std::string &path, RunConfig &config) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file " + path);
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw ConfigError("malformed config file " + path + ": " + e.what());
    }
    if (!j.is_object()) {
        throw ConfigError("config file " + path + " must hold a JSON object");
    }
    try {
        for (const auto &[key, value] : j.items()) {
            if (key == "phi_max") {
                config.phi_max = value.get<double>();
            } else if (key == "eps" || key == "eps_sim") {
                config.eps = value.get<double>();
            } else if (key == "t") {
                config.t = value.get<double>();
            } else if (key == "d_min") {
                config.d_min = value.get<std::size_t>();
            } else if (key == "d_max") {
                config.d_max = value.get<std::size_t>();
            } else if (key == "filter") {
                const auto name = value.get<std::string>();
                if (name == "primes") {
                    config.filter = DimensionFilter::Primes;
                } else if (name == "all-odd") {
                    config.filter = DimensionFilter::AllOdd;
                } else {
                    throw ConfigError("unknown filter '" + name + "'");
                }
            } else if (key == "k") {
                config.k = value.get<std::size_t>();
            } else if (key == "format") {
                const auto name = value.get<std::string>();
                if (name == "csv") {
                    config.format = OutputFormat::Csv;
                } else if (name == "json") {
                    config.format = OutputFormat::Json;
                } else {
                    throw ConfigError("unknown format '" + name + "'");
                }
            } else if (key == "out") {
                config.out = value.get<std::string>();
            } else if (key == "rz_slope") {
                config.model.rz_slope = value.get<double>();
            } else if (key == "rz_intercept") {
                config.model.rz_intercept = value.get<double>();
            } else if (key == "dense_cap") {
                config.dense_cap = value.get<std::size_t>();
            } else if (key == "census_cap") {
                config.census_cap = value.get<std::size_t>();
            } else if (key == "threads") {
                config.threads = value.get<std::size_t>();
            } else {
                throw ConfigError("unknown config key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::type_error &e) {
        throw ConfigError("bad value in config file " + path + ": " + e.what());
    }
}

bool is_prime(std::size_t n) {
    if (n < 2) {
        return false;
    }
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::size_t> scan_dimensions(
    const RunConfig &config, std::size_t default_min, std::size_t default_max, DimensionFilter default_filter) {
    const auto lo = config.d_min.value_or(default_min);
    const auto hi = config.d_max.value_or(default_max);
    const auto filter = config.filter.value_or(default_filter);
    std::vector<std::size_t> out;
    for (std::size_t d : odd_range(lo, hi)) {
        if (filter == DimensionFilter::AllOdd || is_prime(d)) {
            out.push_back(d);
        }
    }
    if (out.empty()) {
        throw ConfigError("empty scan range");
    }
    return out;
}

void write_csv(const Table &table, std::ostream &out) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << cell_csv(row[i]);
        }
        out << '\n';
    }
}

void write_json(const Table &table, const RunConfig &config, const std::string &command, std::ostream &out) {
    nlohmann::json doc;
    doc["meta"] = {
        {"tool", "qdcost"}, {"version", kToolVersion}, {"command", command}, {"config", config_json(config)}};
    doc["rows"] = nlohmann::json::array();
    for (const auto &row : table.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            obj[table.columns[i]] = cell_json(row[i]);
        }
        doc["rows"].push_back(std::move(obj));
    }
    out << doc.dump(2) << '\n';
}

Table cmd_pf_thresholds(const RunConfig &config) {
    config.validate();
    Table table{{"d", "a_max_pf", "a_rz_pf", "favorable"}, {}};
    for (std::size_t d : scan_dimensions(config, 3, 19, DimensionFilter::Primes)) {
        const auto row = pf_thresholds(d, config.eps, config.model);
        table.rows.push_back({as_int(d), row.a_max, row.a_rz, row.favorable()});
    }
    return table;
}

Table cmd_lcu_table(const RunConfig &config) {
    config.validate();
    Table table{{"d", "a_max_lcu", "a_rz_lcu"}, {}};
    const auto options = cost_options(config);
    for (std::size_t d : scan_dimensions(config, 3, 19, DimensionFilter::Primes)) {
        const auto row = lcu_fixed_encoding_thresholds(make_grid(config.phi_max, d), config.t, config.eps, options);
        table.rows.push_back({as_int(d), row.a_max, row.a_rz});
    }
    return table;
}

Table cmd_scan_ratio(const RunConfig &config) {
    config.validate();
    Table table{
        {"d", "n_b", "alpha_qb", "alpha_qd", "q_qb", "q_qd", "per_call_qb", "per_call_qd", "t_tot_qb", "t_tot_qd",
         "ratio", "delta_tot", "budget_per_switch"},
        {}};
    const auto options = cost_options(config);
    const auto dims = scan_dimensions(config, 3, 101, DimensionFilter::AllOdd);
    const auto reports = parallel_map(dims, config.threads, [&](std::size_t d) {
        return ratio_and_budget(make_grid(config.phi_max, d), config.t, config.eps, config.k, options);
    });
    for (const auto &r : reports) {
        table.rows.push_back(
            {as_int(r.d), as_int(r.n_b), r.alpha_qb, r.alpha_qd, r.q_qb, r.q_qd, r.per_call_qb, r.per_call_qd,
             r.t_tot_qb, r.t_tot_qd, r.ratio, r.delta_tot, r.budget_per_switch});
    }
    return table;
}

std::vector<SuiteResult> run_verification(const RunConfig &config) {
    config.validate();
    return {trotter_suite(config), select_suite(config),  prep_suite(config),
            projector_suite(config), dft_suite(config), census_suite(config)};
}

Table verification_table(const std::vector<SuiteResult> &results) {
    Table table{{"suite", "cases", "failures", "max_error", "passed", "detail"}, {}};
    for (const auto &r : results) {
        table.rows.push_back(
            {r.name, as_int(r.cases), as_int(r.failures), r.max_error, r.passed(), r.detail});
    }
    return table;
}

int run_command(const std::string &command, const RunConfig &config, std::ostream &out, std::ostream &err) {
    Table table;
    int code = kExitOk;
    try {
        if (command == "pf-thresholds") {
            table = cmd_pf_thresholds(config);
        } else if (command == "lcu-table") {
            table = cmd_lcu_table(config);
        } else if (command == "scan-ratio") {
            table = cmd_scan_ratio(config);
        } else if (command == "verify") {
            const auto results = run_verification(config);
            table = verification_table(results);
            for (const auto &r : results) {
                if (!r.passed()) {
                    err << "verification failed: " << r.name << " (" << r.failures << " of " << r.cases
                        << " cases, max error " << format_real(r.max_error) << ")\n";
                    code = kExitVerificationFailed;
                }
            }
        } else {
            throw ConfigError("unknown command '" + command + "'");
        }
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitConfigError;
    }

    std::ofstream file;
    if (!config.out.empty()) {
        file.open(config.out);
        if (!file) {
            err << "error: cannot write " << config.out << '\n';
            return kExitConfigError;
        }
    }
    std::ostream &sink = config.out.empty() ? out : file;
    if (config.format == OutputFormat::Csv) {
        write_csv(table, sink);
    } else {
        write_json(table, config, command, sink);
    }
    return code;
}

}  // namespace qdcost::cli
