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

#include "discord_lab/geometric.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace discord_lab {

namespace {

constexpr SphereGrid kMinimumOracleGrid{64, 128};

// rho - sum_i P_i rho P_i = P+ rho P- + P- rho P+, and the two terms are
// adjoint and Hilbert-Schmidt orthogonal, so the distance is 2 ||P+ rho P-||^2.
class DisturbanceKernel {
 public:
  explicit DisturbanceKernel(const DensityMatrix& rho) : rho_(rho.matrix()) {}

  double operator()(const Eigen::Vector3d& n) const {
    Eigen::Matrix2cd half_n;
    half_n << Complex(n.z(), 0.0), Complex(n.x(), -n.y()), Complex(n.x(), n.y()), Complex(-n.z(), 0.0);
    half_n *= 0.5;
    const Eigen::Matrix2cd plus = Eigen::Matrix2cd::Identity() * 0.5 + half_n;
    const Eigen::Matrix2cd minus = Eigen::Matrix2cd::Identity() * 0.5 - half_n;
    Eigen::Matrix4cd p_plus = Eigen::Matrix4cd::Zero();
    Eigen::Matrix4cd p_minus = Eigen::Matrix4cd::Zero();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        p_plus.block<2, 2>(2 * i, 2 * j) = plus(i, j) * Eigen::Matrix2cd::Identity();
        p_minus.block<2, 2>(2 * i, 2 * j) = minus(i, j) * Eigen::Matrix2cd::Identity();
      }
    }
    return 2.0 * (p_plus * rho_ * p_minus).squaredNorm();
  }

 private:
  Eigen::Matrix4cd rho_;
};

std::array<double, 3> sorted_squares(const BellDiagonalState& s) {
  std::array<double, 3> sq = {s.c1 * s.c1, s.c2 * s.c2, s.c3 * s.c3};
  std::sort(sq.begin(), sq.end());
  return sq;
}

}  // namespace

double hs_distance_sq(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("hs_distance_sq: dimension mismatch");
  }
  return (a.matrix() - b.matrix()).squaredNorm();
}

double measurement_disturbance(const DensityMatrix& rho, const MeasurementDirection& d) {
  return hs_distance_sq(rho, dephase_subsystem_a(rho, d));
}

DisturbanceOptimum minimize_measurement_disturbance(const DensityMatrix& rho,
                                                    const SphereSearchOptions& options) {
  if (rho.dim() != 4) throw std::domain_error("expected a two-qubit (4x4) state");
  const DisturbanceKernel kernel(rho);
  const SphereOptimum best =
      maximize_on_sphere([&](const Eigen::Vector3d& n) { return -kernel(n); }, options);
  return {-best.value, best.direction};
}

double geometric_discord_oracle(const BellDiagonalState& s, const SphereGrid& grid) {
  if (grid.theta_points < kMinimumOracleGrid.theta_points ||
      grid.phi_points < kMinimumOracleGrid.phi_points) {
    throw std::invalid_argument("geometric_discord_oracle needs at least a 64x128 grid");
  }
  SphereSearchOptions options;
  options.grid = grid;
  return minimize_measurement_disturbance(to_density_matrix(s), options).value;
}

double geometric_classical_bd(const BellDiagonalState& s) {
  require_valid(s);
  const double c = max_abs_component(s);
  return 0.25 * c * c;
}

double geometric_discord_bd(const BellDiagonalState& s) {
  require_valid(s);
  const auto sq = sorted_squares(s);
  return 0.25 * (sq[0] + sq[1]);
}

GeometricReport geometric_report_bd(const BellDiagonalState& s) {
  return {geometric_classical_bd(s), geometric_discord_bd(s)};
}

}  // namespace discord_lab
