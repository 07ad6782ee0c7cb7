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

#ifndef QDCOST_COSTMODEL_H
#define QDCOST_COSTMODEL_H

#include <cstddef>
#include <optional>

namespace qdcost {

/// Logarithmic synthesis cost models for the two kinds of continuous primitive.
///
/// A qubit R_z to precision delta costs rz_slope * log2(1/delta) + rz_intercept
/// non-Clifford gates. An embedded two-level qudit rotation is modeled as
/// a * log2(1/delta) for a prefactor a that is only known to the caller, so it
/// is optional here; the break-even analysis solves for it instead.
struct SynthesisModel {
    double rz_slope = 0.57;
    double rz_intercept = 8.83;
    std::optional<double> qudit_prefactor;

    /// Throws std::domain_error on non-positive slope or a non-positive prefactor.
    void validate() const;
};

/// Throws std::domain_error unless 0 < delta < 1.
double rz_cost(double delta, const SynthesisModel &model = {});

/// a * log2(1/delta). Throws std::domain_error if the model has no prefactor.
double qudit_primitive_cost(double delta, const SynthesisModel &model);

/// Prefactor a at which a * log2(1/delta) matches rz_cost(delta).
double equivalent_rz_prefactor(double delta, const SynthesisModel &model = {});

/// Relative margin by which a_max must exceed its reference to count as favorable.
/// Whenever the qubit and qudit rotation counts coincide the two prefactors are
/// equal analytically, and rounding must not decide the comparison.
inline constexpr double kFavorableMargin = 1e-9;

bool exceeds_reference(double a_max, double a_reference);

/// Product-formula rotation counts for one Trotter step.
struct PfRotationCounts {
    std::size_t qubit = 0;  // n_b (n_b + 1) / 2 synthesized R_z
    std::size_t qudit = 0;  // d - 1 embedded R_Z^{(k,k+1)}
};

PfRotationCounts pf_rotation_counts(std::size_t d);

struct PfThresholds {
    std::size_t d = 0;
    double eps = 0;
    double a_max = 0;  // break-even qudit prefactor
    double a_rz = 0;   // prefactor that reproduces R_z synthesis at the qudit primitive precision
    double rotation_ratio = 0;  // L_qb / L_qd, the Theta((log d)^2 / d) prefactor

    bool favorable() const { return exceeds_reference(a_max, a_rz); }
};

/// Throws std::invalid_argument for even d, std::domain_error for d < 3 or eps outside (0, 1).
PfThresholds pf_thresholds(std::size_t d, double eps, const SynthesisModel &model = {});

/// Non-Clifford count of one qubit Trotter step at total error eps.
double pf_qubit_cost(std::size_t d, double eps, const SynthesisModel &model = {});

/// Non-Clifford count of one qudit Trotter step at total error eps; needs a prefactor.
double pf_qudit_cost(std::size_t d, double eps, const SynthesisModel &model);

}  // namespace qdcost

#endif
