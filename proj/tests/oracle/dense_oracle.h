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

#ifndef QDCOST_TESTS_DENSE_ORACLE_H
#define QDCOST_TESTS_DENSE_ORACLE_H

// Test-only reference implementations. Nothing here is shared with the
// library code paths it checks.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qdcost/grid.h"
#include "qdcost/rotation.h"

namespace qdcost::oracle {

using Complex = std::complex<double>;
using Matrix = std::vector<std::vector<Complex>>;

inline Matrix identity(std::size_t dim) {
    Matrix m(dim, std::vector<Complex>(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i) {
        m[i][i] = 1.0;
    }
    return m;
}

// exp(-i theta/2 G) = I + (cos(theta/2) - 1) P - i sin(theta/2) G, with P the
// projector onto span{b, c} and G^2 = P.
inline Matrix embedded_matrix(std::size_t dim, const EmbeddedRotation &rotation) {
    const auto b = rotation.levels.low;
    const auto c = rotation.levels.high;
    Matrix g(dim, std::vector<Complex>(dim, 0.0));
    const Complex i{0.0, 1.0};
    switch (rotation.axis) {
        case Axis::X:
            g[b][c] = 1.0;
            g[c][b] = 1.0;
            break;
        case Axis::Y:
            g[b][c] = -i;
            g[c][b] = i;
            break;
        case Axis::Z:
            g[b][b] = 1.0;
            g[c][c] = -1.0;
            break;
    }
    auto m = identity(dim);
    const double h = rotation.angle / 2;
    m[b][b] += std::cos(h) - 1.0;
    m[c][c] += std::cos(h) - 1.0;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t s = 0; s < dim; ++s) {
            m[r][s] -= i * std::sin(h) * g[r][s];
        }
    }
    return m;
}

inline Matrix multiply(const Matrix &a, const Matrix &b) {
    const std::size_t n = a.size();
    Matrix out(n, std::vector<Complex>(n, 0.0));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a[r][k] == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t s = 0; s < n; ++s) {
                out[r][s] += a[r][k] * b[k][s];
            }
        }
    }
    return out;
}

// U = exp(i global) * R_last ... R_first.
inline Matrix schedule_matrix(const RotationSchedule &schedule) {
    auto u = identity(schedule.dim());
    for (const auto &rotation : schedule.rotations()) {
        u = multiply(embedded_matrix(schedule.dim(), rotation), u);
    }
    const Complex phase = std::polar(1.0, schedule.global_phase());
    for (auto &row : u) {
        for (auto &v : row) {
            v *= phase;
        }
    }
    return u;
}

inline double max_off_diagonal(const Matrix &m) {
    double worst = 0;
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t s = 0; s < m.size(); ++s) {
            if (r != s) {
                worst = std::max(worst, std::abs(m[r][s]));
            }
        }
    }
    return worst;
}

// max_n |u_nn - e^{i g} e^{i phases[n]}| with g fixed by level 0.
inline double diagonal_mismatch(const Matrix &u, const std::vector<double> &phases) {
    const Complex anchor = u[0][0] / std::polar(1.0, phases[0]);
    double worst = 0;
    for (std::size_t n = 0; n < u.size(); ++n) {
        worst = std::max(worst, std::abs(u[n][n] - anchor * std::polar(1.0, phases[n])));
    }
    return worst;
}

// sum_{n<=k} (lambda_n^2 - mu), accumulated in long double.
inline double direct_partial_sum(const FieldGrid &grid, std::size_t k) {
    long double mu = 0;
    for (double lambda : grid.lambdas()) {
        mu += static_cast<long double>(lambda) * lambda;
    }
    mu /= grid.d();
    long double total = 0;
    for (std::size_t n = 0; n <= k; ++n) {
        total += static_cast<long double>(grid.lambda(n)) * grid.lambda(n) - mu;
    }
    return static_cast<double>(total);
}

// Signed label of a bit string written MSB-first as text, e.g. "101" -> -1.
inline std::int64_t label_from_bits(const std::vector<int> &msb_first) {
    std::int64_t magnitude = 0;
    for (std::size_t i = 1; i < msb_first.size(); ++i) {
        magnitude = 2 * magnitude + msb_first[i];
    }
    return msb_first[0] ? -magnitude : magnitude;
}

inline std::vector<int> bits_msb_first(std::size_t string, std::size_t width) {
    std::vector<int> bits(width);
    for (std::size_t i = 0; i < width; ++i) {
        bits[i] = static_cast<int>((string >> (width - 1 - i)) & 1U);
    }
    return bits;
}

}  // namespace qdcost::oracle

#endif
