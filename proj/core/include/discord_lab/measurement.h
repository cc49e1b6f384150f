// Copyright 2026 The discord_lab Authors
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

#pragma once

#include <numbers>

#include <Eigen/Dense>

#include "discord_lab/linalg.h"

namespace discord_lab {

/// Unit Bloch vector n = (sinθ cosφ, sinθ sinφ, cosθ) of a one-qubit projective
/// measurement {(I + n·σ)/2, (I - n·σ)/2}.
struct MeasurementDirection {
  double theta = 0.0;  // [0, π]
  double phi = 0.0;    // [0, 2π)

  Eigen::Vector3d bloch() const;

  /// Normalizes n; the zero vector maps to the z axis.
  static MeasurementDirection from_bloch(const Eigen::Vector3d& n);

  /// n and -n describe the same projector set. The canonical representative
  /// has θ < π/2, or θ = π/2 with φ < π; at θ = 0, φ = 0.
  MeasurementDirection canonical() const;

  static MeasurementDirection x_axis() { return {std::numbers::pi / 2, 0.0}; }
  static MeasurementDirection y_axis() { return {std::numbers::pi / 2, std::numbers::pi / 2}; }
  static MeasurementDirection z_axis() { return {0.0, 0.0}; }
};

/// Lexicographic (θ, φ) order used for tie-breaking.
bool lexicographically_less(const MeasurementDirection& a, const MeasurementDirection& b);

/// (I + sign n·σ) / 2 for sign = +1 or -1.
ComplexMatrix measurement_projector(const MeasurementDirection& d, int sign);

/// Non-selective measurement on A: sum_i (Π_i ⊗ I) rho (Π_i ⊗ I).
/// Throws std::invalid_argument unless rho is 4x4.
DensityMatrix dephase_subsystem_a(const DensityMatrix& rho, const MeasurementDirection& d);

}  // namespace discord_lab
