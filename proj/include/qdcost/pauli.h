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

#ifndef QDCOST_PAULI_H
#define QDCOST_PAULI_H

#include <complex>
#include <cstddef>
#include <vector>

#include "qdcost/grid.h"

namespace qdcost {

/// Expansion of phi^2 in powers of the generalized Pauli Z_d = diag(omega^j):
///
///     phi^2 = sum_{r=0}^{d-1} beta_r Z_d^r,   beta_r = c_r exp(i pi r / d).
///
/// The identity coefficient beta_0 is kept but does not contribute to the
/// LCU normalization. Per-r quantities for r >= 1 are accessed by r, not by
/// vector offset.
struct PauliExpansion {
    std::size_t d = 0;
    double phi_max = 0;
    std::vector<std::complex<double>> betas;  // size d
    std::vector<double> c_amps;               // size d - 1, c_r for r = 1..d-1
    std::vector<double> phases;               // size d - 1, arg(beta_r) in [0, 2pi)
    double lambda_norm = 0;                   // sum_{r>=1} |beta_r|
    std::size_t sign_threshold = 0;           // (d + 1) / 2

    double c_amp(std::size_t r) const { return c_amps.at(r - 1); }
    double phase(std::size_t r) const { return phases.at(r - 1); }
    std::size_t n_b() const { return qubit_register_width(d); }
};

/// Closed-form coefficients. beta_r = 2 phi_max^2 / (d-1)^2 * e^{i pi r/d} cos(pi r/d) / sin^2(pi r/d).
PauliExpansion beta_closed_form(const FieldGrid &grid);

/// Verification oracle: beta_r = (1/d) sum_n lambda_n^2 omega^{-rn} by direct O(d^2) summation.
/// The sign of c_r is read off from beta_r * e^{-i pi r/d}.
PauliExpansion beta_dft_oracle(const FieldGrid &grid);

/// Phases theta_0..theta_{d-1} of the SELECT diagonal D = sum_r e^{i theta_r} |r><r|:
/// theta_0 = 0, theta_r = pi r / d (c_r > 0) or pi r / d + pi (c_r < 0).
/// Throws std::domain_error if some |c_r| falls below the irreducibility floor.
std::vector<double> select_diag_phases(const PauliExpansion &expansion);

/// Absolute floor below which a coefficient is treated as vanishing.
double irreducibility_floor(double phi_max);

/// Wraps an angle into [0, 2pi).
double canonical_phase(double angle);

}  // namespace qdcost

#endif
