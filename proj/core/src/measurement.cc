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

#include "discord_lab/measurement.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace discord_lab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

Eigen::Vector3d MeasurementDirection::bloch() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

MeasurementDirection MeasurementDirection::from_bloch(const Eigen::Vector3d& n) {
  const double norm = n.norm();
  if (norm == 0.0) return z_axis();
  const Eigen::Vector3d u = n / norm;
  const double theta = std::acos(std::clamp(u.z(), -1.0, 1.0));
  double phi = std::atan2(u.y(), u.x());
  if (phi < 0.0) phi += kTwoPi;
  if (phi >= kTwoPi) phi = 0.0;
  if (theta == 0.0 || theta == std::numbers::pi) phi = 0.0;
  return {theta, phi};
}

MeasurementDirection MeasurementDirection::canonical() const {
  const bool flip = theta > std::numbers::pi / 2 || (theta == std::numbers::pi / 2 && phi >= std::numbers::pi);
  if (!flip) return theta == 0.0 ? MeasurementDirection{0.0, 0.0} : *this;
  return from_bloch(-bloch());
}

bool lexicographically_less(const MeasurementDirection& a, const MeasurementDirection& b) {
  if (a.theta != b.theta) return a.theta < b.theta;
  return a.phi < b.phi;
}

ComplexMatrix measurement_projector(const MeasurementDirection& d, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("projector sign must be +1 or -1");
  const Eigen::Vector3d n = d.bloch();
  ComplexMatrix p = identity(2);
  for (int i = 1; i <= 3; ++i) p += static_cast<double>(sign) * n(i - 1) * pauli(i);
  return 0.5 * p;
}

DensityMatrix dephase_subsystem_a(const DensityMatrix& rho, const MeasurementDirection& d) {
  if (rho.dim() != 4) throw std::invalid_argument("dephase_subsystem_a expects a two-qubit state");
  ComplexMatrix out = ComplexMatrix::Zero(4, 4);
  for (int sign : {1, -1}) {
    const ComplexMatrix p = kron(measurement_projector(d, sign), identity(2));
    out += p * rho.matrix() * p;
  }
  return DensityMatrix(0.5 * (out + out.adjoint()));
}

}  // namespace discord_lab
