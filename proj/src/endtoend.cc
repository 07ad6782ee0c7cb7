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

#include "qdcost/endtoend.h"

#include <cmath>
#include <stdexcept>

#include "qdcost/lcu.h"
#include "qdcost/pauli.h"

namespace qdcost {

double query_count(double alpha, double t, double eps_sim, QueryMode mode) {
    if (!(alpha >= 0) || !std::isfinite(alpha)) {
        throw std::domain_error("LCU normalization must be non-negative");
    }
    if (!(t >= 0) || !std::isfinite(t)) {
        throw std::domain_error("evolution time must be non-negative");
    }
    if (!(eps_sim > 0 && eps_sim < 1)) {
        throw std::domain_error("simulation error must lie in (0, 1)");
    }
    const double q = alpha * t + std::log2(1 / eps_sim);
    return mode == QueryMode::Ceiling ? std::ceil(q) : q;
}

QubitTotal total_cost_qubit(const FieldGrid &grid, double t, double eps_sim, const CostOptions &options) {
    QubitTotal out;
    out.alpha = qubit_lcu_normalization(grid);
    out.queries = query_count(out.alpha, t, eps_sim, options.query_mode);
    out.eps_be = eps_sim / out.queries;
    const auto call = qubit_blockencoding_cost(grid, out.eps_be);
    out.b_r = call.b_r;
    out.per_call = static_cast<double>(call.t_count_per_call);
    out.total = out.queries * out.per_call;
    return out;
}

QuditTotal total_cost_qudit_hybrid(const FieldGrid &grid, double t, double eps_sim, const CostOptions &options) {
    QuditTotal out;
    out.alpha = beta_closed_form(grid).lambda_norm;
    out.queries = query_count(out.alpha, t, eps_sim, options.query_mode);
    out.eps_be = eps_sim / out.queries;
    const auto call = qudit_hybrid_call_cost(grid.d());
    out.rz_rotations_per_call = call.rz_rotations_per_call;
    out.direct_t_gates = call.t_gates;
    const double rotations = static_cast<double>(call.rz_rotations_per_call);
    out.per_call = rotations * rz_cost(out.eps_be / rotations, options.model) + static_cast<double>(call.t_gates);
    out.total = out.queries * out.per_call;
    return out;
}

ResourceReport ratio_and_budget(
    const FieldGrid &grid, double t, double eps_sim, std::size_t k, const CostOptions &options) {
    if (k == 0) {
        throw std::domain_error("at least one code switch per query is required");
    }
    const auto qb = total_cost_qubit(grid, t, eps_sim, options);
    const auto qd = total_cost_qudit_hybrid(grid, t, eps_sim, options);

    ResourceReport report;
    report.d = grid.d();
    report.n_b = grid.n_b();
    report.t = t;
    report.eps_sim = eps_sim;
    report.switches_per_query = k;
    report.alpha_qb = qb.alpha;
    report.alpha_qd = qd.alpha;
    report.q_qb = qb.queries;
    report.q_qd = qd.queries;
    report.eps_be_qb = qb.eps_be;
    report.eps_be_qd = qd.eps_be;
    report.per_call_qb = qb.per_call;
    report.per_call_qd = qd.per_call;
    report.t_tot_qb = qb.total;
    report.t_tot_qd = qd.total;
    report.ratio = qb.total / qd.total;
    report.delta_tot = qb.total - qd.total;
    report.budget_per_switch = report.delta_tot / (qd.queries * static_cast<double>(k));
    return report;
}

LcuThresholds lcu_fixed_encoding_thresholds(
    const FieldGrid &grid, double t, double eps_sim, const CostOptions &options) {
    const auto qb = total_cost_qubit(grid, t, eps_sim, options);
    const double alpha_qd = beta_closed_form(grid).lambda_norm;
    const double q_qd = query_count(alpha_qd, t, eps_sim, options.query_mode);
    const double eps_be_qd = eps_sim / q_qd;
    const double rotations = static_cast<double>(fixed_encoding_call_rotations(grid.d()));
    const double log_term = std::log2(rotations / eps_be_qd);

    LcuThresholds out;
    out.d = grid.d();
    out.a_max = qb.total / (q_qd * rotations * log_term);
    out.a_rz = equivalent_rz_prefactor(eps_be_qd / rotations, options.model);
    return out;
}

}  // namespace qdcost
