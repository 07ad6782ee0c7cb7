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

#include "qdcost/costmodel.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qdcost/grid.h"
#include "qdcost/trotter.h"

namespace qdcost {

namespace {

void require_precision(double value, const char *what) {
    if (!(value > 0 && value < 1)) {
        throw std::domain_error(std::string(what) + " must lie in (0, 1)");
    }
}

void require_odd_dimension(std::size_t d) {
    if (d < 3) {
        throw std::domain_error("local dimension must be at least 3, got " + std::to_string(d));
    }
    if (d % 2 == 0) {
        throw std::invalid_argument("symmetric truncation requires odd d, got " + std::to_string(d));
    }
}

}  // namespace

void SynthesisModel::validate() const {
    if (!(rz_slope > 0) || !std::isfinite(rz_intercept)) {
        throw std::domain_error("R_z synthesis model needs a positive slope and finite intercept");
    }
    if (qudit_prefactor && !(*qudit_prefactor > 0)) {
        throw std::domain_error("qudit synthesis prefactor must be positive");
    }
}

double rz_cost(double delta, const SynthesisModel &model) {
    require_precision(delta, "rotation precision");
    return model.rz_slope * std::log2(1 / delta) + model.rz_intercept;
}

double qudit_primitive_cost(double delta, const SynthesisModel &model) {
    require_precision(delta, "rotation precision");
    if (!model.qudit_prefactor) {
        throw std::domain_error("qudit synthesis prefactor not set");
    }
    return *model.qudit_prefactor * std::log2(1 / delta);
}

double equivalent_rz_prefactor(double delta, const SynthesisModel &model) {
    return rz_cost(delta, model) / std::log2(1 / delta);
}

bool exceeds_reference(double a_max, double a_reference) {
    return a_max > a_reference * (1 + kFavorableMargin);
}

PfRotationCounts pf_rotation_counts(std::size_t d) {
    require_odd_dimension(d);
    return {qubit_trotter_rz_count(qubit_register_width(d)), d - 1};
}

PfThresholds pf_thresholds(std::size_t d, double eps, const SynthesisModel &model) {
    require_odd_dimension(d);
    require_precision(eps, "target precision");
    const auto counts = pf_rotation_counts(d);
    const double l_qb = static_cast<double>(counts.qubit);
    const double l_qd = static_cast<double>(counts.qudit);

    PfThresholds out;
    out.d = d;
    out.eps = eps;
    out.a_max = l_qb * rz_cost(eps / l_qb, model) / (l_qd * std::log2(l_qd / eps));
    out.a_rz = equivalent_rz_prefactor(eps / l_qd, model);
    out.rotation_ratio = l_qb / l_qd;
    return out;
}

double pf_qubit_cost(std::size_t d, double eps, const SynthesisModel &model) {
    require_precision(eps, "target precision");
    const double l_qb = static_cast<double>(pf_rotation_counts(d).qubit);
    return l_qb * rz_cost(eps / l_qb, model);
}

double pf_qudit_cost(std::size_t d, double eps, const SynthesisModel &model) {
    require_precision(eps, "target precision");
    const double l_qd = static_cast<double>(pf_rotation_counts(d).qudit);
    return l_qd * qudit_primitive_cost(eps / l_qd, model);
}

}  // namespace qdcost
