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

#include "discord_lab/sphere_search.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace discord_lab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxMovesPerStep = 10000;

struct Candidate {
  double value;
  Eigen::Vector3d n;
  MeasurementDirection direction;
};

// Higher value first, then lexicographically smaller direction.
bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value > b.value;
  return lexicographically_less(a.direction, b.direction);
}

Candidate make_candidate(const SphereObjective& f, const Eigen::Vector3d& n) {
  const MeasurementDirection d = MeasurementDirection::from_bloch(n).canonical();
  return {f(n), n, d};
}

// Orthonormal tangent basis at n.
std::pair<Eigen::Vector3d, Eigen::Vector3d> tangent_basis(const Eigen::Vector3d& n) {
  Eigen::Index axis;
  n.cwiseAbs().minCoeff(&axis);
  const Eigen::Vector3d e1 = n.cross(Eigen::Vector3d::Unit(axis)).normalized();
  return {e1, n.cross(e1)};
}

Candidate refine(const SphereObjective& f, Candidate start, double step, double tolerance) {
  const double r = 1.0 / std::sqrt(2.0);
  static constexpr std::array<std::array<double, 2>, 8> kUnitMoves = {{
      {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
  Candidate current = start;
  while (step >= tolerance) {
    int moves = 0;
    while (moves++ < kMaxMovesPerStep) {
      const auto [e1, e2] = tangent_basis(current.n);
      Candidate best = current;
      for (const auto& m : kUnitMoves) {
        const double scale = (m[0] != 0 && m[1] != 0) ? r : 1.0;
        const Eigen::Vector3d t = scale * (m[0] * e1 + m[1] * e2);
        const Eigen::Vector3d trial = (std::cos(step) * current.n + std::sin(step) * t).normalized();
        const Candidate c = make_candidate(f, trial);
        if (c.value > best.value) best = c;
      }
      if (best.value <= current.value) break;
      current = best;
    }
    step *= 0.5;
  }
  return current;
}

}  // namespace

SphereOptimum maximize_on_sphere(const SphereObjective& objective,
                                 const SphereSearchOptions& options) {
  const int nt = options.grid.theta_points;
  const int np = options.grid.phi_points;
  if (nt < 2 || np < 1) throw std::invalid_argument("sphere grid must be at least 2x1");
  if (!(options.angular_tolerance > 0.0)) {
    throw std::invalid_argument("angular tolerance must be positive");
  }

  std::vector<double> values(static_cast<size_t>(nt) * np);
  auto at = [&](int i, int j) -> double& { return values[static_cast<size_t>(i) * np + j]; };
  auto grid_point = [&](int i, int j) {
    return MeasurementDirection{std::numbers::pi * i / (nt - 1), kTwoPi * j / np}.bloch();
  };
  for (int i = 0; i < nt; ++i) {
    const bool pole = (i == 0 || i == nt - 1);
    const double pole_value = pole ? objective(grid_point(i, 0)) : 0.0;
    for (int j = 0; j < np; ++j) at(i, j) = pole ? pole_value : objective(grid_point(i, j));
  }

  std::vector<Candidate> local_maxima;
  for (int i = 0; i < nt; ++i) {
    const bool pole = (i == 0 || i == nt - 1);
    for (int j = 0; j < (pole ? 1 : np); ++j) {
      const double v = at(i, j);
      bool is_max = true;
      for (int di = -1; di <= 1 && is_max; ++di) {
        const int ii = i + di;
        if (ii < 0 || ii >= nt) continue;
        const bool neighbour_pole = (ii == 0 || ii == nt - 1);
        if (pole && di != 0) {
          // A pole is adjacent to its whole neighbouring ring.
          for (int jj = 0; jj < np && is_max; ++jj) is_max = v >= at(ii, jj);
          continue;
        }
        for (int dj = -1; dj <= 1 && is_max; ++dj) {
          const int jj = neighbour_pole ? 0 : ((j + dj) % np + np) % np;
          is_max = v >= at(ii, jj);
        }
      }
      if (is_max) {
        const Eigen::Vector3d n = grid_point(i, j);
        local_maxima.push_back({v, n, MeasurementDirection::from_bloch(n).canonical()});
      }
    }
  }

  std::sort(local_maxima.begin(), local_maxima.end(), better);
  const size_t keep = std::min(local_maxima.size(),
                               static_cast<size_t>(std::max(1, options.max_refined_candidates)));
  const double initial_step = std::max(std::numbers::pi / (nt - 1), kTwoPi / np);

  Candidate best = local_maxima.front();
  for (size_t k = 0; k < keep; ++k) {
    const Candidate c = refine(objective, local_maxima[k], initial_step, options.angular_tolerance);
    if (better(c, best)) best = c;
  }
  return {best.value, best.direction};
}

}  // namespace discord_lab
