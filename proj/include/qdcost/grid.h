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

#ifndef QDCOST_GRID_H
#define QDCOST_GRID_H

#include <cstddef>
#include <vector>

namespace qdcost {

/// Number of qubits needed to hold `d` levels, i.e. ceil(log2(d)). Requires d >= 1.
std::size_t qubit_register_width(std::size_t d);

/// Symmetric uniform truncation of a single field amplitude.
///
/// The d = 2M + 1 eigenvalues are lambda_n = -phi_max + n * delta_phi, so the
/// grid always contains -phi_max, 0 and +phi_max. Instances are only produced
/// by make_grid and are immutable afterwards.
class FieldGrid {
   public:
    double phi_max() const { return phi_max_; }
    std::size_t d() const { return d_; }
    std::size_t half_width() const { return (d_ - 1) / 2; }
    double delta_phi() const { return delta_phi_; }
    std::size_t n_b() const { return n_b_; }
    const std::vector<double> &lambdas() const { return lambdas_; }
    double lambda(std::size_t n) const { return lambdas_.at(n); }

   private:
    friend FieldGrid make_grid(double phi_max, std::size_t d);
    FieldGrid(double phi_max, std::size_t d);

    double phi_max_;
    std::size_t d_;
    double delta_phi_;
    std::size_t n_b_;
    std::vector<double> lambdas_;
};

/// Throws std::invalid_argument for even d ("symmetric truncation requires odd d"),
/// std::domain_error for d < 3 or phi_max <= 0 (or non-finite).
FieldGrid make_grid(double phi_max, std::size_t d);

/// mu = (1/d) * sum_n lambda_n^2, by direct summation over the grid.
double squared_mean(const FieldGrid &grid);

/// Closed form phi_max^2 (d + 1) / (3 (d - 1)) of the same quantity.
double squared_mean_closed_form(const FieldGrid &grid);

}  // namespace qdcost

#endif
