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

#ifndef QDCOST_TROTTER_H
#define QDCOST_TROTTER_H

#include <cstddef>
#include <vector>

#include "qdcost/grid.h"
#include "qdcost/rotation.h"

namespace qdcost {

/// R_z(angle) = exp(-i angle Z / 2) on qubit `qubit` (qubit 0 is the least significant bit).
struct ZTerm {
    std::size_t qubit = 0;
    double angle = 0;
};

/// R_zz(angle) = exp(-i angle Z Z / 2) on qubits first < second.
struct ZZTerm {
    std::size_t first = 0;
    std::size_t second = 0;
    double angle = 0;
};

/// One Trotter step exp(-i t phi^2) on the binary qubit embedding, written as
/// commuting Z and ZZ rotations after phi = P + Q sum_m 2^m Z^(m).
struct QubitTrotterExpansion {
    std::size_t n_b = 0;
    double p_shift = 0;  // -phi_max + (delta_phi / 2)(2^{n_b} - 1)
    double q_scale = 0;  // -delta_phi / 2
    std::vector<ZTerm> linear_terms;
    std::vector<ZZTerm> quad_terms;
    double global_phase = 0;  // identity part -t (P^2 + Q^2 sum_m 4^m)
    std::size_t rz_count = 0;

    /// Eigenvalue of the expanded phi on computational basis state n in [0, 2^{n_b}).
    double field_eigenvalue(std::size_t n) const;
};

/// n_b (n_b + 1) / 2: one R_z per linear term, one per ZZ term.
std::size_t qubit_trotter_rz_count(std::size_t n_b);

QubitTrotterExpansion qubit_trotter_terms(const FieldGrid &grid, double t);

/// The d - 1 adjacent R_Z^{(k,k+1)} rotations realizing diag(exp(-i t lambda_n^2)),
/// with global phase -t mu.
RotationSchedule qudit_trotter_angles(const FieldGrid &grid, double t);

/// sum_{n=0}^{k} (lambda_n^2 - mu) in closed form, for 0 <= k <= d - 2.
/// Throws std::out_of_range otherwise.
double centered_partial_sum(const FieldGrid &grid, std::size_t k);

}  // namespace qdcost

#endif
