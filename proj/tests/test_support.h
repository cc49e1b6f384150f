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

// Hand-rolled generators for property-style tests.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "discord_lab/bell_state.h"
#include "discord_lab/linalg.h"
#include "discord_lab/measurement.h"

namespace discord_lab::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

  /// Uniform valid Bell-diagonal state (rejection from the cube).
  BellDiagonalState bell_state() {
    while (true) {
      BellDiagonalState s{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
      if (is_valid(s)) return s;
    }
  }

  /// Uniform direction on the sphere.
  MeasurementDirection direction() {
    Eigen::Vector3d v(normal(), normal(), normal());
    return MeasurementDirection::from_bloch(v);
  }

  ComplexMatrix complex_matrix(int dim) {
    ComplexMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) m(i, j) = Complex(normal(), normal());
    return m;
  }

  ComplexMatrix hermitian(int dim) {
    const ComplexMatrix g = complex_matrix(dim);
    return 0.5 * (g + g.adjoint());
  }

  /// Full-rank random state G G^dagger / Tr.
  DensityMatrix density_matrix(int dim) {
    const ComplexMatrix g = complex_matrix(dim);
    ComplexMatrix m = g * g.adjoint();
    m /= m.trace();
    return DensityMatrix(0.5 * (m + m.adjoint()));
  }

  Eigen::VectorXcd pure_vector(int dim) {
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = Complex(normal(), normal());
    return v.normalized();
  }

 private:
  std::mt19937_64 engine_;
};

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// -sum lambda log2 lambda with the 0 log 0 = 0 convention.
inline double entropy_of(std::initializer_list<double> p) {
  double s = 0.0;
  for (double x : p)
    if (x > 0) s -= x * std::log2(x);
  return s;
}

}  // namespace discord_lab::testing
