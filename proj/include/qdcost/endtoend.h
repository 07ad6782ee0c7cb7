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

#ifndef QDCOST_ENDTOEND_H
#define QDCOST_ENDTOEND_H

#include <cstddef>
#include <cstdint>

#include "qdcost/costmodel.h"
#include "qdcost/grid.h"

namespace qdcost {

enum class QueryMode {
    /// Q = alpha t + log2(1/eps_sim), kept real-valued.
    Continuous,
    /// ceil of the continuous proxy. Not used for any reported comparison.
    Ceiling,
};

struct CostOptions {
    SynthesisModel model;
    QueryMode query_mode = QueryMode::Continuous;
};

/// Qubitization query proxy alpha t + log2(1/eps_sim).
/// Throws std::domain_error for alpha < 0, t < 0, or eps_sim outside (0, 1).
double query_count(double alpha, double t, double eps_sim, QueryMode mode = QueryMode::Continuous);

/// End-to-end cost of one encoding: Q calls, each accurate to eps_sim / Q.
struct EncodingTotal {
    double alpha = 0;
    double queries = 0;
    double eps_be = 0;
    double per_call = 0;
    double total = 0;
};

struct QubitTotal : EncodingTotal {
    std::int64_t b_r = 0;
};

struct QuditTotal : EncodingTotal {
    std::int64_t rz_rotations_per_call = 0;
    std::int64_t direct_t_gates = 0;
};

/// alpha_qb -> Q -> eps_BE -> b_r -> 32 b_r + 24 n_b - 116 -> Q * per-call.
QubitTotal total_cost_qubit(const FieldGrid &grid, double t, double eps_sim, const CostOptions &options = {});

/// Hybrid qudit LCU: L = 2(2^{n_b} - 1) + n_b synthesized R_z at eps_BE / L each, plus 4 n_b T.
QuditTotal total_cost_qudit_hybrid(const FieldGrid &grid, double t, double eps_sim, const CostOptions &options = {});

struct ResourceReport {
    std::size_t d = 0;
    std::size_t n_b = 0;
    double t = 0;
    double eps_sim = 0;
    std::size_t switches_per_query = 2;
    double alpha_qb = 0;
    double alpha_qd = 0;
    double q_qb = 0;
    double q_qd = 0;
    double eps_be_qb = 0;
    double eps_be_qd = 0;
    double per_call_qb = 0;
    double per_call_qd = 0;
    double t_tot_qb = 0;
    double t_tot_qd = 0;
    double ratio = 0;              // t_tot_qb / t_tot_qd
    double delta_tot = 0;          // t_tot_qb - t_tot_qd
    double budget_per_switch = 0;  // delta_tot / (q_qd k)
};

/// Full hybrid comparison with k directional code switches per query. Throws std::domain_error for k == 0.
ResourceReport ratio_and_budget(
    const FieldGrid &grid, double t, double eps_sim, std::size_t k = 2, const CostOptions &options = {});

struct LcuThresholds {
    std::size_t d = 0;
    double a_max = 0;
    double a_rz = 0;

    bool favorable() const { return exceeds_reference(a_max, a_rz); }
};

/// Break-even prefactor of the fixed-encoding qudit LCU (3d - 3 two-level rotations per call)
/// against the qubit projector-LCU total, and the matching R_z reference prefactor.
LcuThresholds lcu_fixed_encoding_thresholds(
    const FieldGrid &grid, double t, double eps_sim, const CostOptions &options = {});

}  // namespace qdcost

#endif
