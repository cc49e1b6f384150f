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

// Entropic correlation measures for two-qubit states. All quantities are in
// bits. Measurements act on subsystem A and are one-qubit projective
// measurements parameterized by a Bloch direction.

#pragma once

#include <array>
#include <optional>

#include "discord_lab/bell_state.h"
#include "discord_lab/linalg.h"
#include "discord_lab/sphere_search.h"

namespace discord_lab {

/// Branches with probability below this carry the placeholder state I/2 and
/// probability 0.
inline constexpr double kNegligibleBranchProbability = 1e-14;

struct ConditionalBranch {
  double probability;
  DensityMatrix state;  // one-qubit state of B given the outcome
};

/// Outcomes of the measurement {(I + n·σ)/2, (I - n·σ)/2} on A, in that order.
struct ConditionalEnsemble {
  std::array<ConditionalBranch, 2> branches;
};

struct EntropicReport {
  double mutual_info = 0.0;
  double classical = 0.0;
  double discord = 0.0;
  std::optional<MeasurementDirection> optimal_direction;
};

struct ClassicalOptimum {
  double value = 0.0;
  MeasurementDirection direction;
};

// General-state measures. Each throws std::domain_error for a one-qubit input.

/// S(rho_A) + S(rho_B) - S(rho_AB).
double mutual_information(const DensityMatrix& rho);

/// S(rho_AB) - S(rho_A); negative for some entangled states.
double conditional_entropy(const DensityMatrix& rho);

ConditionalEnsemble measure_branch(const DensityMatrix& rho, const MeasurementDirection& d);

/// Sum over outcomes of p_i S(rho_{B|i}).
double measured_conditional_entropy(const DensityMatrix& rho, const MeasurementDirection& d);

/// S(rho_B) - measured_conditional_entropy(rho, d).
double induced_mutual_information(const DensityMatrix& rho, const MeasurementDirection& d);

/// Maximum of induced_mutual_information over projective measurements on A,
/// with the maximizing (canonical) direction.
ClassicalOptimum classical_correlation_optimized(const DensityMatrix& rho,
                                                 const SphereSearchOptions& options = {});

/// Mutual information split into optimized classical correlation and discord.
EntropicReport discord_general(const DensityMatrix& rho, const SphereSearchOptions& options = {});

// Bell-diagonal closed forms. Each throws std::domain_error for an invalid state.
// They evaluate on the sorted components, so any permutation of (c1, c2, c3)
// gives bit-identical results.

/// 2 - S(rho_AB); the marginals of a Bell-diagonal state are maximally mixed.
double mutual_information_bd(const BellDiagonalState& s);

/// [(1 - c) log2(1 - c) + (1 + c) log2(1 + c)] / 2 with c = max |c_i|.
double classical_correlation_bd(const BellDiagonalState& s);

/// mutual_information_bd(s) - classical_correlation_bd(s).
double discord_bd(const BellDiagonalState& s);

EntropicReport entropic_report_bd(const BellDiagonalState& s);

}  // namespace discord_lab
