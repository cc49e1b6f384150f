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

#include "discord_lab/bell_state.h"
#include "discord_lab/linalg.h"
#include "discord_lab/measurement.h"
#include "discord_lab/sphere_search.h"

namespace discord_lab {

/// Geometric measures in squared Hilbert-Schmidt units.
struct GeometricReport {
  double classical_g = 0.0;
  double discord_g = 0.0;
};

/// Tr[(a - b)^†(a - b)]. Throws std::invalid_argument on a dimension mismatch.
double hs_distance_sq(const DensityMatrix& a, const DensityMatrix& b);

/// Squared distance between rho and its image under the non-selective
/// measurement along d on A.
double measurement_disturbance(const DensityMatrix& rho, const MeasurementDirection& d);

struct DisturbanceOptimum {
  double value = 0.0;
  MeasurementDirection direction;
};

/// Minimum of measurement_disturbance over projective measurements on A.
DisturbanceOptimum minimize_measurement_disturbance(const DensityMatrix& rho,
                                                    const SphereSearchOptions& options = {});

/// minimize_measurement_disturbance for the density matrix of s.
/// Throws std::domain_error for an invalid state and std::invalid_argument for
/// a grid coarser than 64x128.
double geometric_discord_oracle(const BellDiagonalState& s, const SphereGrid& grid = {});

/// c^2 / 4 with c = max |c_i|.
double geometric_classical_bd(const BellDiagonalState& s);

/// (c1^2 + c2^2 + c3^2 - c^2) / 4, evaluated as the two smaller squares.
double geometric_discord_bd(const BellDiagonalState& s);

GeometricReport geometric_report_bd(const BellDiagonalState& s);

}  // namespace discord_lab
