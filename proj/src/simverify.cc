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

#include "qdcost/simverify.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qdcost {

DenseState::DenseState(std::vector<std::complex<double>> amplitudes, std::size_t cap)
    : amplitudes_(std::move(amplitudes)), cap_(cap) {
}

DenseState DenseState::basis(std::size_t dim, std::size_t level, std::size_t cap) {
    if (dim == 0 || dim > cap) {
        throw std::length_error("dense state dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap));
    }
    if (level >= dim) {
        throw std::out_of_range("basis level " + std::to_string(level) + " outside dimension " + std::to_string(dim));
    }
    std::vector<std::complex<double>> amplitudes(dim, {0.0, 0.0});
    amplitudes[level] = 1.0;
    return DenseState(std::move(amplitudes), cap);
}

DenseState DenseState::phased(double phase) const {
    const auto factor = std::polar(1.0, phase);
    auto amplitudes = amplitudes_;
    for (auto &a : amplitudes) {
        a *= factor;
    }
    return DenseState(std::move(amplitudes), cap_);
}

double DenseState::norm() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

DiagPhases combine(const DiagPhases &a, const DiagPhases &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("cannot combine diagonals of different dimension");
    }
    DiagPhases out = a;
    for (std::size_t n = 0; n < out.dim(); ++n) {
        out.phases[n] += b.phases[n];
    }
    return out;
}

DiagPhases apply_z_schedule(const RotationSchedule &schedule) {
    auto out = DiagPhases::identity(schedule.dim());
    for (const auto &rotation : schedule.rotations()) {
        if (rotation.axis != Axis::Z) {
            throw std::invalid_argument("diagonal simulation only accepts Z rotations");
        }
        out.phases[rotation.levels.low] -= rotation.angle / 2;
        out.phases[rotation.levels.high] += rotation.angle / 2;
    }
    for (double &phase : out.phases) {
        phase += schedule.global_phase();
    }
    return out;
}

DiagPhases apply_qubit_z_terms(const QubitTrotterExpansion &expansion) {
    const std::size_t strings = std::size_t{1} << expansion.n_b;
    auto out = DiagPhases::identity(strings);
    auto z = [](std::size_t n, std::size_t qubit) { return ((n >> qubit) & 1U) ? -1.0 : 1.0; };
    for (std::size_t n = 0; n < strings; ++n) {
        double phase = expansion.global_phase;
        for (const auto &term : expansion.linear_terms) {
            phase -= term.angle / 2 * z(n, term.qubit);
        }
        for (const auto &term : expansion.quad_terms) {
            phase -= term.angle / 2 * z(n, term.first) * z(n, term.second);
        }
        out.phases[n] = phase;
    }
    return out;
}

DenseState apply_rotation_to_state(const DenseState &state, const EmbeddedRotation &rotation) {
    const auto b = rotation.levels.low;
    const auto c = rotation.levels.high;
    if (!(b < c && c < state.dim())) {
        throw std::out_of_range(
            "rotation levels (" + std::to_string(b) + ", " + std::to_string(c) + ") do not fit dimension " +
            std::to_string(state.dim()));
    }
    auto amplitudes = state.amplitudes();
    const double half = rotation.angle / 2;
    const double cs = std::cos(half);
    const double sn = std::sin(half);
    const auto x = amplitudes[b];
    const auto y = amplitudes[c];
    const std::complex<double> i{0.0, 1.0};
    switch (rotation.axis) {
        case Axis::X:
            amplitudes[b] = cs * x - i * sn * y;
            amplitudes[c] = -i * sn * x + cs * y;
            break;
        case Axis::Y:
            amplitudes[b] = cs * x - sn * y;
            amplitudes[c] = sn * x + cs * y;
            break;
        case Axis::Z:
            amplitudes[b] = std::polar(1.0, -half) * x;
            amplitudes[c] = std::polar(1.0, half) * y;
            break;
    }
    return DenseState(std::move(amplitudes), state.cap());
}

DenseState apply_schedule_to_state(const DenseState &state, const RotationSchedule &schedule) {
    if (schedule.dim() != state.dim()) {
        throw std::invalid_argument("schedule and state dimensions differ");
    }
    DenseState current = state;
    for (const auto &rotation : schedule.rotations()) {
        current = apply_rotation_to_state(current, rotation);
    }
    return current.phased(schedule.global_phase());
}

PhaseComparison equal_up_to_global_phase(const DiagPhases &a, const DiagPhases &b, double tol) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("cannot compare diagonals of different dimension");
    }
    PhaseComparison out;
    if (a.dim() == 0) {
        out.equal = true;
        return out;
    }
    const double anchor = a.phases[0] - b.phases[0];
    for (std::size_t n = 0; n < a.dim(); ++n) {
        const double delta = a.phases[n] - b.phases[n] - anchor;
        out.max_error = std::max(out.max_error, std::abs(std::polar(1.0, delta) - 1.0));
    }
    out.equal = out.max_error <= tol;
    return out;
}

double l2_distance(const DenseState &state, const std::vector<double> &target) {
    if (target.size() != state.dim()) {
        throw std::invalid_argument("target and state dimensions differ");
    }
    double total = 0;
    for (std::size_t n = 0; n < state.dim(); ++n) {
        total += std::norm(state[n] - target[n]);
    }
    return std::sqrt(total);
}

}  // namespace qdcost
