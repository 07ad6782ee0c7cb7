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

#include "qdcost/trotter.h"

#include <gtest/gtest.h>

#include <cmath>

#include "oracle/dense_oracle.h"
#include "qdcost/grid.h"
#include "qdcost/simverify.h"

using namespace qdcost;

TEST(Trotter, RotationCount) {
    EXPECT_EQ(qubit_trotter_rz_count(1), 1U);
    EXPECT_EQ(qubit_trotter_rz_count(2), 3U);
    EXPECT_EQ(qubit_trotter_rz_count(10), 55U);
    const auto e = qubit_trotter_terms(make_grid(1.0, 3), 0.5);
    EXPECT_EQ(e.rz_count, 3U);
    EXPECT_EQ(e.linear_terms.size(), 2U);
    EXPECT_EQ(e.quad_terms.size(), 1U);
}

TEST(Trotter, ZeroTimeIsIdentity) {
    const auto grid = make_grid(1.3, 11);
    const auto e = qubit_trotter_terms(grid, 0.0);
    for (const auto &term : e.linear_terms) {
        EXPECT_EQ(term.angle, 0.0);
    }
    for (const auto &term : e.quad_terms) {
        EXPECT_EQ(term.angle, 0.0);
    }
    EXPECT_EQ(e.global_phase, 0.0);
    const auto s = qudit_trotter_angles(grid, 0.0);
    EXPECT_EQ(s.nontrivial_count(), 0U);
    for (const auto &rotation : s.rotations()) {
        EXPECT_EQ(rotation.angle, 0.0);
    }
}

TEST(Trotter, ThreeLevelAngles) {
    const auto s = qudit_trotter_angles(make_grid(1.0, 3), 1.0);
    ASSERT_EQ(s.size(), 2U);
    EXPECT_NEAR(s.rotations()[0].angle, 2.0 / 3.0, 1e-14);
    EXPECT_NEAR(s.rotations()[1].angle, -2.0 / 3.0, 1e-14);
    EXPECT_NEAR(s.global_phase(), -2.0 / 3.0, 1e-15);
}

TEST(Trotter, FieldReconstruction) {
    for (std::size_t d = 3; d <= 129; d += 2) {
        const auto grid = make_grid(1.0, d);
        const auto e = qubit_trotter_terms(grid, 0.1);
        const auto strings = std::size_t{1} << e.n_b;
        for (std::size_t n = 0; n < strings; ++n) {
            const double identity =
                e.p_shift + e.q_scale * static_cast<double>(strings - 1) - 2 * e.q_scale * static_cast<double>(n);
            ASSERT_NEAR(identity, -1.0 + static_cast<double>(n) * grid.delta_phi(), 1e-12);
            ASSERT_NEAR(e.field_eigenvalue(n), identity, 1e-12);
            if (n < d) {
                ASSERT_NEAR(e.field_eigenvalue(n), grid.lambda(n), 1e-12);
            }
        }
    }
}

TEST(Trotter, QuditScheduleDenseProduct) {
    for (double t : {0.1, 0.37, 1.0, 3.7}) {
        for (std::size_t d = 3; d <= 33; d += 2) {
            const auto grid = make_grid(1.0, d);
            const double mu = squared_mean(grid);
            std::vector<double> target;
            for (double lambda : grid.lambdas()) {
                target.push_back(-t * (lambda * lambda - mu));
            }
            const auto u = oracle::schedule_matrix(qudit_trotter_angles(grid, t));
            ASSERT_LT(oracle::max_off_diagonal(u), 1e-14);
            ASSERT_LT(oracle::diagonal_mismatch(u, target), 1e-10) << "d=" << d << " t=" << t;
        }
    }
}

TEST(Trotter, AnglesRecoveredFromPhases) {
    for (std::size_t d = 3; d <= 63; d += 2) {
        const auto grid = make_grid(1.0, d);
        const auto schedule = qudit_trotter_angles(grid, 3.7);
        const auto phases = apply_z_schedule(schedule);
        // theta_k = 2 sum_{n<=k} alpha_n once the global phase is removed; alpha_n = -phase_n.
        double partial = 0;
        for (std::size_t k = 0; k + 1 < d; ++k) {
            partial += -(phases.phases[k] - schedule.global_phase());
            const double theta = 2 * partial;
            ASSERT_LT(distance_to_trivial(theta - schedule.rotations()[k].angle), 1e-10) << "d=" << d << " k=" << k;
        }
    }
}

TEST(Trotter, PartialSumExamples) {
    EXPECT_NEAR(centered_partial_sum(make_grid(1.0, 3), 0), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(centered_partial_sum(make_grid(1.0, 5), 3), -0.5, 1e-15);
    EXPECT_THROW(centered_partial_sum(make_grid(1.0, 5), 4), std::out_of_range);
}

TEST(Trotter, PartialSumsClosedFormEverywhere) {
    for (std::size_t d = 3; d <= 513; d += 2) {
        const auto grid = make_grid(1.0, d);
        for (std::size_t k = 0; k + 1 < d; ++k) {
            const double closed = centered_partial_sum(grid, k);
            const double direct = oracle::direct_partial_sum(grid, k);
            ASSERT_NE(closed, 0.0) << "d=" << d << " k=" << k;
            ASSERT_LE(std::abs(closed - direct), 1e-10 * std::abs(direct)) << "d=" << d << " k=" << k;
        }
    }
}

TEST(Trotter, QubitCircuitMatchesFieldSquared) {
    for (std::size_t d : {3U, 5U, 9U, 17U, 31U, 63U}) {
        const auto grid = make_grid(0.8, d);
        for (double t : {0.1, 1.0, 3.7}) {
            const auto e = qubit_trotter_terms(grid, t);
            const auto got = apply_qubit_z_terms(e);
            for (std::size_t n = 0; n < got.dim(); ++n) {
                const double phi = e.field_eigenvalue(n);
                ASSERT_LT(std::abs(std::polar(1.0, got.phases[n] + t * phi * phi) - 1.0), 1e-12);
            }
        }
    }
}
