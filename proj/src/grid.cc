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

#include "qdcost/grid.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qdcost {

std::size_t qubit_register_width(std::size_t d) {
    if (d == 0) {
        throw std::domain_error("register width undefined for zero levels");
    }
    std::size_t width = 0;
    while ((std::size_t{1} << width) < d) {
        ++width;
    }
    return width;
}

FieldGrid::FieldGrid(double phi_max, std::size_t d)
    : phi_max_(phi_max),
      d_(d),
      delta_phi_(phi_max / static_cast<double>((d - 1) / 2)),
      n_b_(qubit_register_width(d)),
      lambdas_(d) {
    // Build from the centered label so that lambdas[M] is exactly 0 and the
    // grid is exactly symmetric in floating point.
    const auto m = static_cast<long long>(half_width());
    for (std::size_t n = 0; n < d; ++n) {
        const auto label = static_cast<long long>(n) - m;
        lambdas_[n] = static_cast<double>(label) * delta_phi_;
    }
    lambdas_.front() = -phi_max;
    lambdas_.back() = phi_max;
}

FieldGrid make_grid(double phi_max, std::size_t d) {
    if (!std::isfinite(phi_max) || phi_max <= 0) {
        throw std::domain_error("phi_max must be positive and finite");
    }
    if (d < 3) {
        throw std::domain_error("local dimension must be at least 3, got " + std::to_string(d));
    }
    if (d % 2 == 0) {
        throw std::invalid_argument("symmetric truncation requires odd d, got " + std::to_string(d));
    }
    return FieldGrid(phi_max, d);
}

double squared_mean(const FieldGrid &grid) {
    double total = 0;
    for (double lambda : grid.lambdas()) {
        total += lambda * lambda;
    }
    return total / static_cast<double>(grid.d());
}

double squared_mean_closed_form(const FieldGrid &grid) {
    const auto d = static_cast<double>(grid.d());
    return grid.phi_max() * grid.phi_max() * (d + 1) / (3 * (d - 1));
}

}  // namespace qdcost
