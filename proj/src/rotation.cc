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

#include "qdcost/rotation.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qdcost {

std::string_view axis_name(Axis axis) {
    switch (axis) {
        case Axis::X:
            return "X";
        case Axis::Y:
            return "Y";
        case Axis::Z:
            return "Z";
    }
    return "?";
}

double reduce_angle_mod_4pi(double angle) {
    const double period = 4 * std::numbers::pi;
    double reduced = std::fmod(angle, period);
    if (reduced <= -period / 2) {
        reduced += period;
    } else if (reduced > period / 2) {
        reduced -= period;
    }
    return reduced;
}

double distance_to_trivial(double angle) {
    const double period = 4 * std::numbers::pi;
    double reduced = std::fmod(std::abs(angle), period);
    return std::min(reduced, period - reduced);
}

bool is_trivial_angle(double angle, double tolerance) {
    return distance_to_trivial(angle) < tolerance;
}

RotationSchedule::RotationSchedule(std::size_t dim, std::vector<EmbeddedRotation> rotations, double global_phase)
    : dim_(dim), rotations_(std::move(rotations)), global_phase_(global_phase), nontrivial_count_(0) {
    for (const auto &rotation : rotations_) {
        if (!(rotation.levels.low < rotation.levels.high && rotation.levels.high < dim_)) {
            throw std::out_of_range(
                "invalid level pair (" + std::to_string(rotation.levels.low) + ", " +
                std::to_string(rotation.levels.high) + ") for dimension " + std::to_string(dim_));
        }
        if (!is_trivial_angle(rotation.angle)) {
            ++nontrivial_count_;
        }
    }
}

bool RotationSchedule::all_adjacent() const {
    return std::all_of(rotations_.begin(), rotations_.end(), [](const EmbeddedRotation &r) {
        return r.levels.high == r.levels.low + 1;
    });
}

bool RotationSchedule::all_on_axis(Axis axis) const {
    return std::all_of(rotations_.begin(), rotations_.end(), [axis](const EmbeddedRotation &r) {
        return r.axis == axis;
    });
}

RotationSchedule diagonal_to_adjacent_z(const std::vector<double> &betas) {
    const auto dim = betas.size();
    if (dim < 2) {
        throw std::domain_error("diagonal decomposition needs at least two levels");
    }
    double mean = 0;
    for (double beta : betas) {
        mean += beta;
    }
    mean /= static_cast<double>(dim);

    std::vector<EmbeddedRotation> rotations;
    rotations.reserve(dim - 1);
    double prefix = 0;
    for (std::size_t k = 0; k + 1 < dim; ++k) {
        prefix += betas[k] - mean;
        rotations.push_back({Axis::Z, {k, k + 1}, reduce_angle_mod_4pi(2 * prefix)});
    }
    return RotationSchedule(dim, std::move(rotations), -mean);
}

}  // namespace qdcost
