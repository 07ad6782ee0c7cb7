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

#ifndef QDCOST_ROTATION_H
#define QDCOST_ROTATION_H

#include <cstddef>
#include <string_view>
#include <vector>

namespace qdcost {

enum class Axis { X, Y, Z };

std::string_view axis_name(Axis axis);

/// Two levels b < c of a qudit that an embedded rotation acts on.
struct LevelPair {
    std::size_t low = 0;
    std::size_t high = 0;

    friend bool operator==(const LevelPair &, const LevelPair &) = default;
};

/// R_G^{(b,c)}(theta) = exp(-i theta/2 G^{(b,c)}) with G one of the embedded
/// generators X = |b><c| + |c><b|, Y = -i|b><c| + i|c><b|, Z = |b><b| - |c><c|.
struct EmbeddedRotation {
    Axis axis = Axis::Z;
    LevelPair levels;
    double angle = 0;
};

/// Tolerance for deciding whether an angle is trivial modulo 4pi.
inline constexpr double kTrivialAngleTolerance = 1e-10;

/// Reduces an angle mod 4pi into the representative range (-2pi, 2pi].
double reduce_angle_mod_4pi(double angle);

/// Distance from `angle` to the nearest multiple of 4pi.
double distance_to_trivial(double angle);

/// True iff R_G(angle) is the identity, i.e. angle == 0 (mod 4pi).
bool is_trivial_angle(double angle, double tolerance = kTrivialAngleTolerance);

/// Ordered product of embedded rotations on a `dim`-level system, in
/// application order (rotations.front() acts first), times exp(i global_phase).
class RotationSchedule {
   public:
    /// Throws std::out_of_range if any level pair violates low < high < dim.
    RotationSchedule(std::size_t dim, std::vector<EmbeddedRotation> rotations, double global_phase = 0);

    std::size_t dim() const { return dim_; }
    const std::vector<EmbeddedRotation> &rotations() const { return rotations_; }
    std::size_t size() const { return rotations_.size(); }
    double global_phase() const { return global_phase_; }
    std::size_t nontrivial_count() const { return nontrivial_count_; }

    bool all_adjacent() const;
    bool all_on_axis(Axis axis) const;

   private:
    std::size_t dim_;
    std::vector<EmbeddedRotation> rotations_;
    double global_phase_;
    std::size_t nontrivial_count_;
};

/// Adjacent-Z decomposition of an arbitrary diagonal unitary diag(exp(-i beta_n)):
/// theta_k = 2 sum_{n<=k} (beta_n - mean(beta)), global phase -mean(beta).
/// The angles are reduced mod 4pi into (-2pi, 2pi].
RotationSchedule diagonal_to_adjacent_z(const std::vector<double> &betas);

}  // namespace qdcost

#endif
