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

#include <array>
#include <optional>
#include <string>

#include "discord_lab/linalg.h"

namespace discord_lab {

/// Two-qubit state rho = (I⊗I + c1 σx⊗σx + c2 σy⊗σy + c3 σz⊗σz) / 4.
///
/// A plain value: construction does not validate. Functions that need a
/// physical state call require_valid() and throw std::domain_error otherwise.
/// The valid set is the tetrahedron with vertices (1,1,-1), (-1,-1,-1),
/// (1,-1,1) and (-1,1,1).
struct BellDiagonalState {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  std::array<double, 3> components() const { return {c1, c2, c3}; }
  friend bool operator==(const BellDiagonalState&, const BellDiagonalState&) = default;
};

/// Weights of the four Bell projectors in a Bell-diagonal state.
struct BellSpectrum {
  std::array<double, 4> lambda{};
  double sum() const { return lambda[0] + lambda[1] + lambda[2] + lambda[3]; }
};

inline constexpr double kBellValidityTolerance = 1e-12;

/// (1-c1-c2-c3, 1-c1+c2+c3, 1+c1-c2+c3, 1+c1+c2-c3) / 4, in that order.
/// These are the weights on |psi->, |phi->, |phi+>, |psi+> respectively.
BellSpectrum bell_eigenvalues(const BellDiagonalState& s);

/// Human-readable description of the first violated tetrahedron inequality,
/// or nullopt when s is a valid state.
std::optional<std::string> violated_constraint(const BellDiagonalState& s);

bool is_valid(const BellDiagonalState& s);

/// Throws std::domain_error carrying violated_constraint(s).
void require_valid(const BellDiagonalState& s);

/// max(|c1|, |c2|, |c3|).
double max_abs_component(const BellDiagonalState& s);

/// Throws std::domain_error for an invalid state.
DensityMatrix to_density_matrix(const BellDiagonalState& s);

enum class BellVector { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

/// (|01> ± |10>)/√2 for psi, (|00> ± |11>)/√2 for phi.
Eigen::VectorXcd bell_vector(BellVector which);

}  // namespace discord_lab
