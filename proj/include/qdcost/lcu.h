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

#ifndef QDCOST_LCU_H
#define QDCOST_LCU_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qdcost/grid.h"
#include "qdcost/pauli.h"
#include "qdcost/rotation.h"

namespace qdcost {

// ---------------------------------------------------------------------------
// Qubit baseline: signed-binary projector LCU.
// ---------------------------------------------------------------------------

/// n_b-qubit register read as (sign, magnitude). The sign bit is the most
/// significant bit of the computational index; the remaining n_b - 1 bits are
/// the magnitude, least significant first. Both all-zero-magnitude strings
/// carry label 0.
class SignedBinaryRegister {
   public:
    explicit SignedBinaryRegister(std::size_t n_b);

    std::size_t n_b() const { return n_b_; }
    std::size_t string_count() const { return std::size_t{1} << n_b_; }
    std::int64_t max_label() const { return (std::int64_t{1} << (n_b_ - 1)) - 1; }

    bool sign_bit(std::size_t string) const;
    /// Magnitude bit r (0 <= r <= n_b - 2).
    bool magnitude_bit(std::size_t string, std::size_t r) const;
    std::int64_t magnitude(std::size_t string) const;
    std::int64_t label(std::size_t string) const;

   private:
    std::size_t n_b_;
};

/// Largest register the dense projector oracle will enumerate.
inline constexpr std::size_t kMaxProjectorOracleQubits = 20;

/// delta_phi^2 sum_{r,s} 2^{r+s} l_r l_s for every computational string.
/// Throws std::length_error when n_b exceeds kMaxProjectorOracleQubits.
std::vector<double> qubit_projector_diag_oracle(const FieldGrid &grid);

/// Toffoli-to-T conversion used for all qubit arithmetic costs.
inline constexpr std::int64_t kTPerToffoli = 4;

struct QubitLcuCost {
    std::size_t n_b = 0;
    double alpha_qb = 0;             // delta_phi^2 (2^{n_b - 1} - 1)^2
    std::int64_t b_r = 0;            // rotation-synthesis bits for the supplied eps
    std::int64_t prep_toffoli = 0;   // 4 b_r + 2 n_b - 16
    std::int64_t prep_dagger_toffoli = 0;
    std::int64_t select_toffoli = 0;  // 2 (n_b - 1)
    std::int64_t select_t = 0;        // 20 direct T gates
    std::int64_t t_count_per_call = 0;
};

/// b_r = ceil(log2(9 pi^2 / (2 eps)) / 2). Requires eps in (0, 1).
std::int64_t rotation_precision_bits(double eps);

/// (2^{n_b - 1} - 1)^2 delta_phi^2.
double qubit_lcu_normalization(const FieldGrid &grid);

/// Per-call T count of the projector LCU at block-encoding error eps.
/// Throws std::domain_error if eps is not in (0, 1).
QubitLcuCost qubit_blockencoding_cost(const FieldGrid &grid, double eps);

// ---------------------------------------------------------------------------
// Hybrid qudit oracles: binary PREP plus D = D_sign D_clock on a qubit index.
// ---------------------------------------------------------------------------

struct QuditHybridCost {
    std::size_t n_b = 0;
    std::int64_t t_gates = 0;               // 4 n_b, from the D_sign comparator
    std::int64_t rz_rotations_per_call = 0;  // 2 (2^{n_b} - 1) + n_b
    std::int64_t ancillas = 0;              // n_b scratch + 1 flag
};

/// Throws std::invalid_argument for even d and std::domain_error for d < 3.
QuditHybridCost qudit_hybrid_call_cost(std::size_t d);

/// exp(i angle Z^(qubit)) factor of D_clock.
struct ClockRotation {
    std::size_t qubit = 0;
    double angle = 0;  // -pi 2^m / (2 d)
};

/// D_clock = exp(i pi N / d) as n_b single-qubit Z rotations, up to a global phase.
std::vector<ClockRotation> dclock_angles(std::size_t d);

/// Comparator realization of D_sign: flag f(r) = [r >= threshold] is kicked
/// back as a -1 phase. Only the cost and the classical flag are modeled.
struct DsignSpec {
    std::size_t d = 0;
    std::size_t threshold = 0;  // (d + 1) / 2
    std::int64_t t_count = 0;   // 4 n_b
    std::size_t scratch_ancillas = 0;
    std::size_t flag_ancillas = 1;

    bool flag(std::size_t r) const { return r >= threshold; }
};

/// Throws std::logic_error if sgn(c_r) disagrees with the threshold flag for some r.
DsignSpec dsign_spec(const PauliExpansion &expansion);

// ---------------------------------------------------------------------------
// Fixed-encoding qudit oracles, built from embedded two-level rotations.
// ---------------------------------------------------------------------------

/// SELECT diagonal D as d - 1 adjacent R_Z^{(k,k+1)}(vartheta_k) with global phase
/// gamma = (1/d) sum theta_n, angles from the closed form
/// vartheta_k = (pi/d)(k+1)(4m-k) - 2pi max(0, k-m), m = (d-1)/2.
/// Angles are reduced mod 4pi exactly (integer arithmetic on the multiple of pi/d).
RotationSchedule fixed_encoding_select_schedule(const PauliExpansion &expansion);

/// Same diagonal via the generic prefix-sum construction
/// vartheta_k = -2 sum_{n<=k} (theta_n - gamma); used to cross-check the closed form.
RotationSchedule select_schedule_direct(const PauliExpansion &expansion);

/// Closed-form vartheta_k as an integer multiple N_k of pi/d, reduced into [0, 4d).
/// R_Z^{(k,k+1)}(vartheta_k) is trivial exactly when this is zero.
std::vector<std::int64_t> select_angle_multiples(std::size_t d);

/// s(d): nontrivial rotations in the fixed-encoding SELECT decomposition.
std::size_t select_nontrivial_count(std::size_t d);

/// Target amplitudes sqrt(|beta_r| / Lambda) for r = 1..d-1 (index 0 is 0).
std::vector<double> prep_target_amplitudes(const PauliExpansion &expansion);

/// Ratios above 1 by more than this are treated as an upstream normalization bug.
inline constexpr double kPrepRatioSlack = 1e-9;

/// PREP as R_Y^{(0,r)}(theta_r) for r = 1..d-1, applied in increasing r,
/// with sin(theta_r / 2) = a_r / prod_{k<r} cos(theta_k / 2).
/// Throws std::logic_error if a ratio exceeds 1 + kPrepRatioSlack.
RotationSchedule prep_ry_schedule(const PauliExpansion &expansion);

/// 3d - 3: one SELECT bound (d - 1) plus PREP and PREP^dagger (d - 1 each).
std::size_t fixed_encoding_call_rotations(std::size_t d);

}  // namespace qdcost

#endif
