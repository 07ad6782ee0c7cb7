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

#include "qdcost/pauli.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qdcost {

namespace {

constexpr double kHermiticityTolerance = 1e-12;

// Fills c_amps, phases, lambda_norm and sign_threshold from betas, and checks
// the structural invariants every expansion of phi^2 must satisfy.
void complete_expansion(PauliExpansion &e) {
    const auto d = e.d;
    const double pi = std::numbers::pi;
    const double floor = irreducibility_floor(e.phi_max);
    const double scale = e.phi_max * e.phi_max;

    e.c_amps.assign(d - 1, 0.0);
    e.phases.assign(d - 1, 0.0);
    e.lambda_norm = 0;
    e.sign_threshold = (d + 1) / 2;
    for (std::size_t r = 1; r < d; ++r) {
        const auto beta = e.betas[r];
        const auto conj_partner = std::conj(e.betas[d - r]);
        if (std::abs(beta - conj_partner) > kHermiticityTolerance * std::max(1.0, scale)) {
            throw std::logic_error("Pauli expansion is not Hermitian at r = " + std::to_string(r));
        }
        if (std::abs(beta) <= floor) {
            throw std::domain_error("Pauli expansion is reducible: beta_" + std::to_string(r) + " vanishes");
        }
        const double rotation = pi * static_cast<double>(r) / static_cast<double>(d);
        const double c = (beta * std::polar(1.0, -rotation)).real();
        e.c_amps[r - 1] = c;
        e.phases[r - 1] = canonical_phase(c > 0 ? rotation : rotation + pi);
        e.lambda_norm += std::abs(beta);
    }
}

}  // namespace

double irreducibility_floor(double phi_max) {
    return 1e-12 * phi_max * phi_max;
}

double canonical_phase(double angle) {
    const double two_pi = 2 * std::numbers::pi;
    double wrapped = std::fmod(angle, two_pi);
    if (wrapped < 0) {
        wrapped += two_pi;
    }
    if (wrapped >= two_pi) {
        wrapped = 0;
    }
    return wrapped;
}

PauliExpansion beta_closed_form(const FieldGrid &grid) {
    const double pi = std::numbers::pi;
    const auto d = grid.d();
    const double dd = static_cast<double>(d);
    const double phi2 = grid.phi_max() * grid.phi_max();
    const double prefactor = 2 * phi2 / ((dd - 1) * (dd - 1));

    PauliExpansion e;
    e.d = d;
    e.phi_max = grid.phi_max();
    e.betas.resize(d);
    e.betas[0] = phi2 * (dd + 1) / (3 * (dd - 1));
    for (std::size_t r = 1; r < d; ++r) {
        const double x = pi * static_cast<double>(r) / dd;
        const double s = std::sin(x);
        const double c_r = prefactor * std::cos(x) / (s * s);
        e.betas[r] = std::polar(c_r, x);
    }
    complete_expansion(e);
    return e;
}

PauliExpansion beta_dft_oracle(const FieldGrid &grid) {
    const double pi = std::numbers::pi;
    const auto d = grid.d();
    const double dd = static_cast<double>(d);

    // omega^{-k} for k = 0..d-1; exponents are reduced mod d exactly.
    std::vector<std::complex<double>> roots(d);
    for (std::size_t k = 0; k < d; ++k) {
        roots[k] = std::polar(1.0, -2 * pi * static_cast<double>(k) / dd);
    }

    PauliExpansion e;
    e.d = d;
    e.phi_max = grid.phi_max();
    e.betas.assign(d, {0.0, 0.0});
    for (std::size_t r = 0; r < d; ++r) {
        std::complex<double> total{0.0, 0.0};
        for (std::size_t n = 0; n < d; ++n) {
            const double lambda = grid.lambda(n);
            total += lambda * lambda * roots[(r * n) % d];
        }
        e.betas[r] = total / dd;
    }
    complete_expansion(e);
    return e;
}

std::vector<double> select_diag_phases(const PauliExpansion &expansion) {
    const double pi = std::numbers::pi;
    const auto d = expansion.d;
    const double floor = irreducibility_floor(expansion.phi_max);
    std::vector<double> theta(d, 0.0);
    for (std::size_t r = 1; r < d; ++r) {
        const double c = expansion.c_amp(r);
        if (std::abs(c) <= floor) {
            throw std::domain_error("c_" + std::to_string(r) + " vanishes; SELECT phase undefined");
        }
        const double rotation = pi * static_cast<double>(r) / static_cast<double>(d);
        theta[r] = c > 0 ? rotation : rotation + pi;
    }
    return theta;
}

}  // namespace qdcost
