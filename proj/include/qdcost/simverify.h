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

#ifndef QDCOST_SIMVERIFY_H
#define QDCOST_SIMVERIFY_H

#include <complex>
#include <cstddef>
#include <vector>

#include "qdcost/rotation.h"
#include "qdcost/trotter.h"

namespace qdcost {

/// Largest dimension for which dense state vectors are built.
inline constexpr std::size_t kDenseDimensionCap = 64;

/// Normalized state vector of a single small qudit.
class DenseState {
   public:
    /// Basis state |level>. Throws std::length_error above `cap`, std::out_of_range for a bad level.
    static DenseState basis(std::size_t dim, std::size_t level, std::size_t cap = kDenseDimensionCap);

    std::size_t dim() const { return amplitudes_.size(); }
    std::size_t cap() const { return cap_; }
    const std::vector<std::complex<double>> &amplitudes() const { return amplitudes_; }
    const std::complex<double> &operator[](std::size_t level) const { return amplitudes_.at(level); }
    double norm() const;
    /// Copy multiplied by exp(i phase).
    DenseState phased(double phase) const;

   private:
    DenseState(std::vector<std::complex<double>> amplitudes, std::size_t cap);
    friend DenseState apply_rotation_to_state(const DenseState &, const EmbeddedRotation &);

    std::vector<std::complex<double>> amplitudes_;
    std::size_t cap_;
};

/// Diagonal unitary diag(exp(i phases[n])). Composition adds phases.
struct DiagPhases {
    std::vector<double> phases;

    std::size_t dim() const { return phases.size(); }
    static DiagPhases identity(std::size_t dim) { return {std::vector<double>(dim, 0.0)}; }
};

/// Product of two diagonals. Throws std::invalid_argument on dimension mismatch.
DiagPhases combine(const DiagPhases &a, const DiagPhases &b);

/// Accumulates R_Z^{(b,c)}(theta) = exp(-i theta/2)|b><b| + exp(i theta/2)|c><c| over the
/// schedule plus its global phase. Throws std::invalid_argument on a non-Z rotation.
DiagPhases apply_z_schedule(const RotationSchedule &schedule);

/// Per-basis-state phases of the qubit Z/ZZ Trotter circuit over all 2^{n_b} strings.
DiagPhases apply_qubit_z_terms(const QubitTrotterExpansion &expansion);

/// Applies one embedded rotation. Throws std::out_of_range if the levels do not fit the state.
DenseState apply_rotation_to_state(const DenseState &state, const EmbeddedRotation &rotation);

/// Applies every rotation of the schedule in order, then its global phase.
DenseState apply_schedule_to_state(const DenseState &state, const RotationSchedule &schedule);

struct PhaseComparison {
    bool equal = false;
    double max_error = 0;  // max_n |exp(i Delta_n) - 1| after aligning level 0
};

/// Compares two diagonals up to a global phase, anchored at level 0.
/// Throws std::invalid_argument on dimension mismatch.
PhaseComparison equal_up_to_global_phase(const DiagPhases &a, const DiagPhases &b, double tol);

/// l2 distance between a state and a real target amplitude vector.
double l2_distance(const DenseState &state, const std::vector<double> &target);

}  // namespace qdcost

#endif
