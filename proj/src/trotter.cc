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

#include "qdcost/trotter.h"

#include <stdexcept>
#include <string>

#include "qdcost/grid.h"

namespace qdcost {

double QubitTrotterExpansion::field_eigenvalue(std::size_t n) const {
    double value = p_shift;
    for (std::size_t m = 0; m < n_b; ++m) {
        const double z = ((n >> m) & 1U) ? -1.0 : 1.0;
        value += q_scale * static_cast<double>(std::size_t{1} << m) * z;
    }
    return value;
}

std::size_t qubit_trotter_rz_count(std::size_t n_b) {
    return n_b * (n_b + 1) / 2;
}

QubitTrotterExpansion qubit_trotter_terms(const FieldGrid &grid, double t) {
    QubitTrotterExpansion e;
    e.n_b = grid.n_b();
    const double levels = static_cast<double>(std::size_t{1} << e.n_b);
    e.p_shift = -grid.phi_max() + grid.delta_phi() / 2 * (levels - 1);
    e.q_scale = -grid.delta_phi() / 2;

    const double p = e.p_shift;
    const double q = e.q_scale;
    double identity = p * p;
    for (std::size_t m = 0; m < e.n_b; ++m) {
        const double weight = static_cast<double>(std::size_t{1} << m);
        // Z_m^2 = I folds the diagonal of the double sum into the identity.
        identity += q * q * weight * weight;
        e.linear_terms.push_back({m, 2 * t * (2 * p * q) * weight});
    }
    for (std::size_t m = 0; m < e.n_b; ++m) {
        for (std::size_t m2 = m + 1; m2 < e.n_b; ++m2) {
            const double weight = static_cast<double>(std::size_t{1} << (m + m2));
            // The symmetric double sum hits each unordered pair twice.
            e.quad_terms.push_back({m, m2, 2 * t * q * q * weight * 2});
        }
    }
    e.global_phase = -t * identity;
    e.rz_count = e.linear_terms.size() + e.quad_terms.size();
    return e;
}

RotationSchedule qudit_trotter_angles(const FieldGrid &grid, double t) {
    std::vector<double> betas;
    betas.reserve(grid.d());
    for (double lambda : grid.lambdas()) {
        betas.push_back(t * lambda * lambda);
    }
    return diagonal_to_adjacent_z(betas);
}

double centered_partial_sum(const FieldGrid &grid, std::size_t k) {
    const auto d = grid.d();
    if (k + 2 > d) {
        throw std::out_of_range(
            "partial sum index " + std::to_string(k) + " outside [0, " + std::to_string(d - 2) + "]");
    }
    const double dd = static_cast<double>(d);
    const double kk = static_cast<double>(k);
    const double phi2 = grid.phi_max() * grid.phi_max();
    return phi2 * (4 * (kk + 1) / (3 * (dd - 1) * (dd - 1))) * (kk - (dd - 2) / 2) * (kk - (dd - 1));
}

}  // namespace qdcost
