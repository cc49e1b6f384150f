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

#include <functional>

#include <Eigen/Dense>

#include "discord_lab/measurement.h"

namespace discord_lab {

struct SphereGrid {
  int theta_points = 64;  // θ_i = π i / (theta_points - 1), poles included
  int phi_points = 128;   // φ_j = 2π j / phi_points
};

struct SphereSearchOptions {
  SphereGrid grid;
  /// Refinement stops once the angular step falls below this.
  double angular_tolerance = 1e-6;
  /// Number of grid local maxima that are refined.
  int max_refined_candidates = 16;
};

struct SphereOptimum {
  double value = 0.0;
  MeasurementDirection direction;  // canonical
};

using SphereObjective = std::function<double(const Eigen::Vector3d& n)>;

/// Deterministic global maximization over the unit sphere: a full θ×φ grid
/// scan, then compass-style refinement (eight tangent directions, step halving)
/// started at each of the best grid local maxima. Ties in value resolve to the
/// lexicographically smallest canonical direction, so the result does not
/// depend on evaluation order.
///
/// The objective must be invariant under n -> -n (as any function of a
/// projective measurement is). Throws std::invalid_argument for a grid smaller
/// than 2x1 or a non-positive tolerance.
SphereOptimum maximize_on_sphere(const SphereObjective& objective,
                                 const SphereSearchOptions& options = {});

}  // namespace discord_lab
