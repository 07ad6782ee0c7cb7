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

#include "qdcost/lcu.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qdcost {

namespace {

void require_odd_dimension(std::size_t d) {
    if (d < 3) {
        throw std::domain_error("local dimension must be at least 3, got " + std::to_string(d));
    }
    if (d % 2 == 0) {
        throw std::invalid_argument("symmetric truncation requires odd d, got " + std::to_string(d));
    }
}

}  // namespace

SignedBinaryRegister::SignedBinaryRegister(std::size_t n_b) : n_b_(n_b) {
    if (n_b < 2 || n_b > 62) {
        throw std::domain_error("signed-binary register needs 2..62 qubits, got " + std::to_string(n_b));
    }
}

bool SignedBinaryRegister::sign_bit(std::size_t string) const {
    return ((string >> (n_b_ - 1)) & 1U) != 0;
}

bool SignedBinaryRegister::magnitude_bit(std::size_t string, std::size_t r) const {
    if (r + 1 >= n_b_) {
        throw std::out_of_range("magnitude bit " + std::to_string(r) + " out of range");
    }
    return ((string >> r) & 1U) != 0;
}

std::int64_t SignedBinaryRegister::magnitude(std::size_t string) const {
    const std::size_t mask = (std::size_t{1} << (n_b_ - 1)) - 1;
    return static_cast<std::int64_t>(string & mask);
}

std::int64_t SignedBinaryRegister::label(std::size_t string) const {
    const auto mag = magnitude(string);
    return sign_bit(string) ? -mag : mag;
}

std::vector<double> qubit_projector_diag_oracle(const FieldGrid &grid) {
    const auto n_b = grid.n_b();
    if (n_b > kMaxProjectorOracleQubits) {
        throw std::length_error("register of " + std::to_string(n_b) + " qubits is too large to enumerate");
    }
    const SignedBinaryRegister reg(n_b);
    const double delta2 = grid.delta_phi() * grid.delta_phi();
    std::vector<double> diag(reg.string_count());
    for (std::size_t string = 0; string < reg.string_count(); ++string) {
        double projector_sum = 0;
        for (std::size_t r = 0; r + 1 < n_b; ++r) {
            for (std::size_t s = 0; s + 1 < n_b; ++s) {
                if (reg.magnitude_bit(string, r) && reg.magnitude_bit(string, s)) {
                    projector_sum += static_cast<double>(std::size_t{1} << (r + s));
                }
            }
        }
        diag[string] = delta2 * projector_sum;
    }
    return diag;
}

std::int64_t rotation_precision_bits(double eps) {
    if (!(eps > 0 && eps < 1)) {
        throw std::domain_error("block-encoding error must lie in (0, 1)");
    }
    const double pi2 = std::numbers::pi * std::numbers::pi;
    return static_cast<std::int64_t>(std::ceil(0.5 * std::log2(9 * pi2 / (2 * eps))));
}

double qubit_lcu_normalization(const FieldGrid &grid) {
    const std::int64_t span = (std::int64_t{1} << (grid.n_b() - 1)) - 1;
    return grid.delta_phi() * grid.delta_phi() * static_cast<double>(span * span);
}

QubitLcuCost qubit_blockencoding_cost(const FieldGrid &grid, double eps) {
    QubitLcuCost cost;
    cost.n_b = grid.n_b();
    cost.alpha_qb = qubit_lcu_normalization(grid);
    cost.b_r = rotation_precision_bits(eps);
    const auto n_b = static_cast<std::int64_t>(cost.n_b);
    cost.prep_toffoli = 4 * cost.b_r + 2 * n_b - 16;
    cost.prep_dagger_toffoli = cost.prep_toffoli;
    cost.select_toffoli = 2 * (n_b - 1);
    cost.select_t = 20;
    cost.t_count_per_call =
        kTPerToffoli * (cost.prep_toffoli + cost.prep_dagger_toffoli + cost.select_toffoli) + cost.select_t;
    return cost;
}

QuditHybridCost qudit_hybrid_call_cost(std::size_t d) {
    require_odd_dimension(d);
    QuditHybridCost cost;
    cost.n_b = qubit_register_width(d);
    const auto n_b = static_cast<std::int64_t>(cost.n_b);
    const std::int64_t prep_rotations = (std::int64_t{1} << n_b) - 1;
    cost.t_gates = 4 * n_b;
    cost.rz_rotations_per_call = 2 * prep_rotations + n_b;
    cost.ancillas = n_b + 1;
    return cost;
}

std::vector<ClockRotation> dclock_angles(std::size_t d) {
    require_odd_dimension(d);
    const auto n_b = qubit_register_width(d);
    std::vector<ClockRotation> rotations;
    rotations.reserve(n_b);
    for (std::size_t m = 0; m < n_b; ++m) {
        const double weight = static_cast<double>(std::size_t{1} << m);
        rotations.push_back({m, -std::numbers::pi * weight / (2 * static_cast<double>(d))});
    }
    return rotations;
}

DsignSpec dsign_spec(const PauliExpansion &expansion) {
    DsignSpec spec;
    spec.d = expansion.d;
    spec.threshold = (expansion.d + 1) / 2;
    const auto n_b = expansion.n_b();
    spec.t_count = 4 * static_cast<std::int64_t>(n_b);
    spec.scratch_ancillas = n_b;
    spec.flag_ancillas = 1;
    for (std::size_t r = 1; r < expansion.d; ++r) {
        const bool negative = expansion.c_amp(r) < 0;
        if (negative != spec.flag(r)) {
            throw std::logic_error(
                "sign of c_" + std::to_string(r) + " disagrees with comparator threshold " +
                std::to_string(spec.threshold));
        }
    }
    return spec;
}

std::vector<std::int64_t> select_angle_multiples(std::size_t d) {
    require_odd_dimension(d);
    const auto dd = static_cast<std::int64_t>(d);
    const std::int64_t m = (dd - 1) / 2;
    const std::int64_t period = 4 * dd;
    std::vector<std::int64_t> multiples;
    multiples.reserve(d - 1);
    for (std::int64_t k = 0; k + 1 < dd; ++k) {
        std::int64_t n = (k + 1) * (4 * m - k) - 2 * dd * std::max<std::int64_t>(0, k - m);
        n %= period;
        if (n < 0) {
            n += period;
        }
        multiples.push_back(n);
    }
    return multiples;
}

std::size_t select_nontrivial_count(std::size_t d) {
    const auto multiples = select_angle_multiples(d);
    return static_cast<std::size_t>(
        std::count_if(multiples.begin(), multiples.end(), [](std::int64_t n) { return n != 0; }));
}

namespace {

double mean_select_phase(const std::vector<double> &theta) {
    double total = 0;
    for (double value : theta) {
        total += value;
    }
    return total / static_cast<double>(theta.size());
}

}  // namespace

RotationSchedule fixed_encoding_select_schedule(const PauliExpansion &expansion) {
    // The closed form relies on the single-threshold sign pattern.
    dsign_spec(expansion);
    const auto d = expansion.d;
    const auto dd = static_cast<std::int64_t>(d);
    const auto multiples = select_angle_multiples(d);
    std::vector<EmbeddedRotation> rotations;
    rotations.reserve(d - 1);
    for (std::size_t k = 0; k + 1 < d; ++k) {
        // Representative in (-2d, 2d] so that the angle lands in (-2pi, 2pi].
        std::int64_t n = multiples[k];
        if (n > 2 * dd) {
            n -= 4 * dd;
        }
        const double angle = std::numbers::pi * static_cast<double>(n) / static_cast<double>(d);
        rotations.push_back({Axis::Z, {k, k + 1}, angle});
    }
    return RotationSchedule(d, std::move(rotations), mean_select_phase(select_diag_phases(expansion)));
}

RotationSchedule select_schedule_direct(const PauliExpansion &expansion) {
    // D = diag(exp(+i theta_n)) is diag(exp(-i beta_n)) with beta_n = -theta_n.
    auto beta = select_diag_phases(expansion);
    for (double &value : beta) {
        value = -value;
    }
    return diagonal_to_adjacent_z(beta);
}

std::vector<double> prep_target_amplitudes(const PauliExpansion &expansion) {
    std::vector<double> amplitudes(expansion.d, 0.0);
    for (std::size_t r = 1; r < expansion.d; ++r) {
        amplitudes[r] = std::sqrt(std::abs(expansion.betas[r]) / expansion.lambda_norm);
    }
    return amplitudes;
}

RotationSchedule prep_ry_schedule(const PauliExpansion &expansion) {
    const auto d = expansion.d;
    const auto amplitudes = prep_target_amplitudes(expansion);
    for (std::size_t r = 1; r < d; ++r) {
        if (!(amplitudes[r] > 0)) {
            throw std::domain_error("PREP amplitude a_" + std::to_string(r) + " is not positive");
        }
    }

    // tail[r] = sum_{j >= r} a_j^2, which equals prod_{k<r} cos^2(theta_k / 2)
    // along the recursion.
    std::vector<double> tail(d + 1, 0.0);
    for (std::size_t r = d - 1; r >= 1; --r) {
        tail[r] = tail[r + 1] + amplitudes[r] * amplitudes[r];
    }

    std::vector<EmbeddedRotation> rotations;
    rotations.reserve(d - 1);
    double remaining = 1;  // prod_{k<r} cos(theta_k / 2)
    for (std::size_t r = 1; r < d; ++r) {
        const double ratio = amplitudes[r] / remaining;
        if (ratio > 1 + kPrepRatioSlack) {
            throw std::logic_error(
                "PREP recursion ratio " + std::to_string(ratio) + " exceeds 1 at r = " + std::to_string(r));
        }
        // sin(theta/2) = ratio, evaluated as atan2 against the remaining tail
        // norm; arcsin of a ratio near 1 loses half the significant digits.
        const double half = std::atan2(amplitudes[r], std::sqrt(tail[r + 1]));
        rotations.push_back({Axis::Y, {0, r}, 2 * half});
        remaining *= std::cos(half);
    }
    return RotationSchedule(d, std::move(rotations), 0);
}

std::size_t fixed_encoding_call_rotations(std::size_t d) {
    if (d < 3) {
        throw std::domain_error("local dimension must be at least 3, got " + std::to_string(d));
    }
    return 3 * d - 3;
}

}  // namespace qdcost
