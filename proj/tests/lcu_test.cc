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

#include "qdcost/lcu.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracle/dense_oracle.h"
#include "qdcost/grid.h"
#include "qdcost/pauli.h"
#include "qdcost/simverify.h"

using namespace qdcost;
using std::numbers::pi;

TEST(SignedBinary, ThreeLevelLabels) {
    const SignedBinaryRegister reg(2);
    EXPECT_EQ(reg.label(0), 0);
    EXPECT_EQ(reg.label(1), 1);
    EXPECT_EQ(reg.label(2), 0);
    EXPECT_EQ(reg.label(3), -1);
    EXPECT_EQ(reg.max_label(), 1);
    EXPECT_THROW(SignedBinaryRegister(1), std::domain_error);
}

TEST(SignedBinary, LabelsMatchBitStrings) {
    for (std::size_t n_b = 2; n_b <= 10; ++n_b) {
        const SignedBinaryRegister reg(n_b);
        for (std::size_t s = 0; s < reg.string_count(); ++s) {
            ASSERT_EQ(reg.label(s), oracle::label_from_bits(oracle::bits_msb_first(s, n_b)));
        }
    }
}

TEST(ProjectorOracle, ThreeLevels) {
    const auto grid = make_grid(1.0, 3);
    const auto diag = qubit_projector_diag_oracle(grid);
    EXPECT_EQ(diag, (std::vector<double>{0.0, 1.0, 0.0, 1.0}));
}

TEST(ProjectorOracle, NineLevelsExact) {
    const auto grid = make_grid(1.0, 9);
    const SignedBinaryRegister reg(4);
    const auto diag = qubit_projector_diag_oracle(grid);
    const double delta2 = grid.delta_phi() * grid.delta_phi();
    for (std::size_t s = 0; s < 16; ++s) {
        const auto l = reg.label(s);
        EXPECT_EQ(diag[s], delta2 * static_cast<double>(l * l));
    }
}

TEST(ProjectorOracle, NegativeZeroVanishes) {
    for (std::size_t n_b = 2; n_b <= 8; ++n_b) {
        const auto grid = make_grid(1.0, (std::size_t{1} << n_b) - 1);
        const auto diag = qubit_projector_diag_oracle(grid);
        EXPECT_EQ(diag[0], 0.0);
        EXPECT_EQ(diag[std::size_t{1} << (n_b - 1)], 0.0);
    }
}

TEST(QubitLcu, PrecisionBits) {
    EXPECT_EQ(rotation_precision_bits(1e-6), 13);
    EXPECT_THROW(rotation_precision_bits(0.0), std::domain_error);
    EXPECT_THROW(rotation_precision_bits(1.0), std::domain_error);
}

TEST(QubitLcu, PerCallCount) {
    const auto five = qubit_blockencoding_cost(make_grid(1.0, 5), 1e-6);
    EXPECT_EQ(five.b_r, 13);
    EXPECT_EQ(five.t_count_per_call, 372);
    for (std::size_t n_b = 2; n_b <= 10; ++n_b) {
        const auto cost = qubit_blockencoding_cost(make_grid(1.0, (std::size_t{1} << n_b) - 1), 1e-6);
        const auto n = static_cast<std::int64_t>(n_b);
        EXPECT_EQ(cost.n_b, n_b);
        EXPECT_EQ(cost.prep_toffoli, 4 * 13 + 2 * n - 16);
        EXPECT_EQ(cost.prep_dagger_toffoli, cost.prep_toffoli);
        EXPECT_EQ(cost.select_toffoli, 2 * (n - 1));
        EXPECT_EQ(cost.select_t, 20);
        EXPECT_EQ(cost.t_count_per_call, 32 * 13 + 24 * n - 116);
    }
}

TEST(QubitLcu, Normalization) {
    EXPECT_EQ(qubit_lcu_normalization(make_grid(1.0, 3)), 1.0);
    EXPECT_EQ(qubit_lcu_normalization(make_grid(1.0, 5)), 0.25 * 9);
}

TEST(HybridQudit, CallCosts) {
    const auto three = qudit_hybrid_call_cost(3);
    EXPECT_EQ(three.t_gates, 8);
    EXPECT_EQ(three.rz_rotations_per_call, 8);
    EXPECT_EQ(three.ancillas, 3);
    EXPECT_EQ(qudit_hybrid_call_cost(5).t_gates, 12);
    EXPECT_EQ(qudit_hybrid_call_cost(5).rz_rotations_per_call, 17);
    EXPECT_EQ(qudit_hybrid_call_cost(9).t_gates, 16);
    EXPECT_EQ(qudit_hybrid_call_cost(9).rz_rotations_per_call, 34);
    EXPECT_THROW(qudit_hybrid_call_cost(4), std::invalid_argument);
}

TEST(HybridQudit, ClockAngles) {
    const auto three = dclock_angles(3);
    ASSERT_EQ(three.size(), 2U);
    EXPECT_EQ(three[0].qubit, 0U);
    EXPECT_NEAR(three[0].angle, -pi / 6, 1e-15);
    EXPECT_NEAR(three[1].angle, -pi / 3, 1e-15);
}

TEST(HybridQudit, ClockPhasesPerIndex) {
    for (std::size_t d : {3U, 5U, 7U, 9U, 33U}) {
        const auto rotations = dclock_angles(d);
        const auto strings = std::size_t{1} << rotations.size();
        std::vector<double> phase(strings, 0.0);
        for (std::size_t r = 0; r < strings; ++r) {
            for (const auto &rot : rotations) {
                const double z = ((r >> rot.qubit) & 1U) ? -1.0 : 1.0;
                phase[r] += rot.angle * z;
            }
        }
        for (std::size_t r = 0; r < strings; ++r) {
            const double relative = phase[r] - phase[0];
            EXPECT_LT(std::abs(std::polar(1.0, relative) - std::polar(1.0, pi * r / d)), 1e-12) << "d=" << d;
        }
    }
}

TEST(Dsign, SmallCases) {
    const auto five = dsign_spec(beta_closed_form(make_grid(1.0, 5)));
    EXPECT_EQ(five.threshold, 3U);
    EXPECT_FALSE(five.flag(1));
    EXPECT_FALSE(five.flag(2));
    EXPECT_TRUE(five.flag(3));
    EXPECT_TRUE(five.flag(4));
    EXPECT_EQ(five.t_count, 12);
    const auto three = dsign_spec(beta_closed_form(make_grid(1.0, 3)));
    EXPECT_EQ(three.threshold, 2U);
    EXPECT_FALSE(three.flag(1));
    EXPECT_TRUE(three.flag(2));
}

TEST(Dsign, RejectsWrongSignPattern) {
    auto expansion = beta_closed_form(make_grid(1.0, 7));
    expansion.c_amps[0] = -expansion.c_amps[0];
    EXPECT_THROW(dsign_spec(expansion), std::logic_error);
}

TEST(Dsign, PhaseAssembly) {
    for (std::size_t d = 3; d <= 513; d += 2) {
        const auto expansion = beta_closed_form(make_grid(1.0, d));
        const auto spec = dsign_spec(expansion);
        const auto theta = select_diag_phases(expansion);
        for (std::size_t r = 1; r < d; ++r) {
            const double sign = spec.flag(r) ? -1.0 : 1.0;
            ASSERT_LT(std::abs(sign * std::polar(1.0, pi * r / d) - std::polar(1.0, theta[r])), 1e-12);
        }
    }
}

TEST(FixedSelect, ThreeLevels) {
    // k = m takes no 2pi correction, so vartheta_1 = 2pi: -1 on the subspace, not the identity.
    EXPECT_EQ(select_angle_multiples(3), (std::vector<std::int64_t>{4, 6}));
    const auto s = fixed_encoding_select_schedule(beta_closed_form(make_grid(1.0, 3)));
    ASSERT_EQ(s.size(), 2U);
    EXPECT_NEAR(s.rotations()[0].angle, reduce_angle_mod_4pi(4 * pi / 3), 1e-14);
    EXPECT_NEAR(s.rotations()[1].angle, 2 * pi, 1e-14);
    EXPECT_EQ(s.nontrivial_count(), 2U);
    EXPECT_EQ(select_nontrivial_count(3), 2U);
    EXPECT_EQ(select_schedule_direct(beta_closed_form(make_grid(1.0, 3))).nontrivial_count(), 2U);
}

TEST(FixedSelect, SmallCensus) {
    // Exact-integer enumeration of the closed form.
    const std::pair<std::size_t, std::size_t> expected[] = {
        {5, 4}, {7, 6}, {13, 12}, {15, 13}, {21, 19}, {35, 33}, {105, 101}, {165, 161}, {231, 227}};
    for (const auto &[d, s] : expected) {
        EXPECT_EQ(select_nontrivial_count(d), s) << "d=" << d;
    }
}

TEST(FixedSelect, DenseProductUpTo63) {
    for (std::size_t d = 3; d <= 63; d += 2) {
        const auto expansion = beta_closed_form(make_grid(1.0, d));
        const auto schedule = fixed_encoding_select_schedule(expansion);
        ASSERT_TRUE(schedule.all_adjacent());
        ASSERT_TRUE(schedule.all_on_axis(Axis::Z));
        const auto u = oracle::schedule_matrix(schedule);
        ASSERT_LT(oracle::max_off_diagonal(u), 1e-14);
        ASSERT_LT(oracle::diagonal_mismatch(u, select_diag_phases(expansion)), 1e-10) << "d=" << d;
    }
}

TEST(FixedSelect, ClosedFormMatchesPrefixSums) {
    std::size_t deficit_counts[5] = {};
    for (std::size_t d = 3; d <= 513; d += 2) {
        const auto expansion = beta_closed_form(make_grid(1.0, d));
        const auto closed = fixed_encoding_select_schedule(expansion);
        const auto direct = select_schedule_direct(expansion);
        ASSERT_EQ(closed.size(), direct.size());
        for (std::size_t k = 0; k < closed.size(); ++k) {
            ASSERT_LT(distance_to_trivial(closed.rotations()[k].angle - direct.rotations()[k].angle), 1e-9)
                << "d=" << d << " k=" << k;
        }
        const auto s = select_nontrivial_count(d);
        ASSERT_EQ(closed.nontrivial_count(), s);
        ASSERT_EQ(direct.nontrivial_count(), s);
        const auto deficit = d - s;
        ASSERT_TRUE(deficit == 1 || deficit == 2 || deficit == 4) << "d=" << d << " s=" << s;
        deficit_counts[deficit]++;
        ASSERT_GE(fixed_encoding_call_rotations(d), s + 2 * (d - 1));
    }
    // Census frozen from an independent exact-integer enumeration.
    EXPECT_EQ(deficit_counts[1], 108U);
    EXPECT_EQ(deficit_counts[2], 130U);
    EXPECT_EQ(deficit_counts[4], 18U);
}

TEST(FixedPrep, ThreeLevelAngles) {
    const auto s = prep_ry_schedule(beta_closed_form(make_grid(1.0, 3)));
    ASSERT_EQ(s.size(), 2U);
    EXPECT_EQ(s.rotations()[0].levels, (LevelPair{0, 1}));
    EXPECT_EQ(s.rotations()[1].levels, (LevelPair{0, 2}));
    EXPECT_NEAR(s.rotations()[0].angle, pi / 2, 1e-14);
    EXPECT_NEAR(s.rotations()[1].angle, pi, 1e-14);
}

TEST(FixedPrep, GroundAmplitudeVanishes) {
    for (std::size_t d = 3; d <= 513; d += 2) {
        const auto schedule = prep_ry_schedule(beta_closed_form(make_grid(1.0, d)));
        double ground = 1;
        for (const auto &rotation : schedule.rotations()) {
            ground *= std::cos(rotation.angle / 2);
        }
        ASSERT_LT(std::abs(ground), 1e-12) << "d=" << d;
    }
}

TEST(FixedPrep, DenseStateMatchesTargets) {
    for (std::size_t d = 3; d <= 63; d += 2) {
        const auto expansion = beta_closed_form(make_grid(1.0, d));
        const auto u = oracle::schedule_matrix(prep_ry_schedule(expansion));
        const auto target = prep_target_amplitudes(expansion);
        double err2 = 0;
        for (std::size_t n = 0; n < d; ++n) {
            err2 += std::norm(u[n][0] - target[n]);
        }
        ASSERT_LT(std::sqrt(err2), 1e-10) << "d=" << d;
    }
}

TEST(FixedPrep, TargetsNormalized) {
    const auto target = prep_target_amplitudes(beta_closed_form(make_grid(1.0, 21)));
    double total = 0;
    for (double a : target) {
        total += a * a;
    }
    EXPECT_EQ(target[0], 0.0);
    EXPECT_NEAR(total, 1.0, 1e-14);
}

TEST(FixedEncoding, CallRotations) {
    EXPECT_EQ(fixed_encoding_call_rotations(3), 6U);
    EXPECT_EQ(fixed_encoding_call_rotations(19), 54U);
}
