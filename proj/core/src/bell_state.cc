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

#include "discord_lab/bell_state.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace discord_lab {

namespace {

constexpr const char* kWeightFormulas[4] = {
    "(1 - c1 - c2 - c3)/4",
    "(1 - c1 + c2 + c3)/4",
    "(1 + c1 - c2 + c3)/4",
    "(1 + c1 + c2 - c3)/4",
};

}  // namespace

BellSpectrum bell_eigenvalues(const BellDiagonalState& s) {
  const auto [c1, c2, c3] = s.components();
  return BellSpectrum{{
      0.25 * (1.0 - c1 - c2 - c3),
      0.25 * (1.0 - c1 + c2 + c3),
      0.25 * (1.0 + c1 - c2 + c3),
      0.25 * (1.0 + c1 + c2 - c3),
  }};
}

bool is_valid(const BellDiagonalState& s) {
  if (!std::isfinite(s.c1) || !std::isfinite(s.c2) || !std::isfinite(s.c3)) return false;
  const BellSpectrum spectrum = bell_eigenvalues(s);
  return std::all_of(spectrum.lambda.begin(), spectrum.lambda.end(), [](double l) {
    return l >= -kBellValidityTolerance && l <= 1.0 + kBellValidityTolerance;
  });
}

std::optional<std::string> violated_constraint(const BellDiagonalState& s) {
  if (is_valid(s)) return std::nullopt;
  for (double c : s.components()) {
    if (!std::isfinite(c)) return std::string("correlation coefficients must be finite");
  }
  const BellSpectrum spectrum = bell_eigenvalues(s);
  for (int k = 0; k < 4; ++k) {
    const double l = spectrum.lambda[k];
    if (l < -kBellValidityTolerance || l > 1.0 + kBellValidityTolerance) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "Bell weight lambda" << (k + 1) << " = " << kWeightFormulas[k] << " = " << l
          << " is outside [0, 1] for (c1, c2, c3) = (" << s.c1 << ", " << s.c2 << ", " << s.c3
          << ")";
      return msg.str();
    }
  }
  return std::nullopt;
}

void require_valid(const BellDiagonalState& s) {
  if (is_valid(s)) return;
  if (auto why = violated_constraint(s)) throw std::domain_error(*why);
}

double max_abs_component(const BellDiagonalState& s) {
  return std::max({std::abs(s.c1), std::abs(s.c2), std::abs(s.c3)});
}

DensityMatrix to_density_matrix(const BellDiagonalState& s) {
  require_valid(s);
  const auto c = s.components();
  ComplexMatrix m = kron(identity(2), identity(2));
  for (int i = 1; i <= 3; ++i) {
    const ComplexMatrix p = pauli(i);
    m += c[i - 1] * kron(p, p);
  }
  return DensityMatrix(0.25 * m);
}

Eigen::VectorXcd bell_vector(BellVector which) {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  switch (which) {
    case BellVector::PsiPlus: v(1) = r; v(2) = r; break;
    case BellVector::PsiMinus: v(1) = r; v(2) = -r; break;
    case BellVector::PhiPlus: v(0) = r; v(3) = r; break;
    case BellVector::PhiMinus: v(0) = r; v(3) = -r; break;
  }
  return v;
}

}  // namespace discord_lab
