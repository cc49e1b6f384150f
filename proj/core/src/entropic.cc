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

#include "discord_lab/entropic.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "discord_lab/measurement.h"

namespace discord_lab {

namespace {

void require_two_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw std::domain_error("expected a two-qubit (4x4) state");
}

// p S(sigma / p) for an unnormalized 2x2 Hermitian block sigma with trace p.
double weighted_branch_entropy(const Eigen::Matrix2cd& sigma) {
  const double p = sigma.trace().real();
  if (p < kNegligibleBranchProbability) return 0.0;
  const double a = sigma(0, 0).real();
  const double d = sigma(1, 1).real();
  const double gap = std::sqrt((a - d) * (a - d) + 4.0 * std::norm(sigma(0, 1)));
  const double hi = 0.5 * (p + gap);
  const double lo = std::max(0.0, 0.5 * (p - gap));
  return -(xlog2x(hi) + xlog2x(lo)) + xlog2x(p);
}

// Conditional entropy of B after measuring A along n, from the 2x2 blocks
// R_ab = <a|_A rho |b>_A:
//   Tr_A[(Π± ⊗ I) rho] = (rho_B ± M) / 2,
//   M = n_z (R_00 - R_11) + (n_x + i n_y) R_01 + (n_x - i n_y) R_10.
class ConditionalEntropyKernel {
 public:
  explicit ConditionalEntropyKernel(const DensityMatrix& rho) {
    const ComplexMatrix& m = rho.matrix();
    const Eigen::Matrix2cd r00 = m.block(0, 0, 2, 2);
    const Eigen::Matrix2cd r11 = m.block(2, 2, 2, 2);
    r01_ = m.block(0, 2, 2, 2);
    r10_ = m.block(2, 0, 2, 2);
    rho_b_ = r00 + r11;
    diff_ = r00 - r11;
  }

  double operator()(const Eigen::Vector3d& n) const {
    const Complex up(n.x(), n.y());
    const Eigen::Matrix2cd mm = n.z() * diff_ + up * r01_ + std::conj(up) * r10_;
    return weighted_branch_entropy(0.5 * (rho_b_ + mm)) + weighted_branch_entropy(0.5 * (rho_b_ - mm));
  }

 private:
  Eigen::Matrix2cd rho_b_, diff_, r01_, r10_;
};

std::array<double, 3> sorted_descending(const BellDiagonalState& s) {
  std::array<double, 3> c = s.components();
  std::sort(c.begin(), c.end(), std::greater<>());
  return c;
}

}  // namespace

double mutual_information(const DensityMatrix& rho) {
  require_two_qubit(rho);
  return von_neumann_entropy(partial_trace(rho, Subsystem::B)) +
         von_neumann_entropy(partial_trace(rho, Subsystem::A)) - von_neumann_entropy(rho);
}

double conditional_entropy(const DensityMatrix& rho) {
  require_two_qubit(rho);
  return von_neumann_entropy(rho) - von_neumann_entropy(partial_trace(rho, Subsystem::B));
}

ConditionalEnsemble measure_branch(const DensityMatrix& rho, const MeasurementDirection& d) {
  require_two_qubit(rho);
  auto branch = [&](int sign) {
    const ComplexMatrix p = kron(measurement_projector(d, sign), identity(2));
    const ComplexMatrix unnormalized = partial_trace(ComplexMatrix(p * rho.matrix() * p), Subsystem::A);
    const double prob = unnormalized.trace().real();
    if (prob < kNegligibleBranchProbability) {
      return ConditionalBranch{0.0, DensityMatrix::maximally_mixed(2)};
    }
    ComplexMatrix state = unnormalized / prob;
    state = 0.5 * (state + state.adjoint()).eval();
    return ConditionalBranch{prob, DensityMatrix(std::move(state))};
  };
  return ConditionalEnsemble{{branch(+1), branch(-1)}};
}

double measured_conditional_entropy(const DensityMatrix& rho, const MeasurementDirection& d) {
  double s = 0.0;
  for (const ConditionalBranch& b : measure_branch(rho, d).branches) {
    if (b.probability > 0.0) s += b.probability * von_neumann_entropy(b.state);
  }
  return s;
}

double induced_mutual_information(const DensityMatrix& rho, const MeasurementDirection& d) {
  return von_neumann_entropy(partial_trace(rho, Subsystem::A)) - measured_conditional_entropy(rho, d);
}

ClassicalOptimum classical_correlation_optimized(const DensityMatrix& rho,
                                                 const SphereSearchOptions& options) {
  require_two_qubit(rho);
  const double s_b = von_neumann_entropy(partial_trace(rho, Subsystem::A));
  const ConditionalEntropyKernel kernel(rho);
  const SphereOptimum best =
      maximize_on_sphere([&](const Eigen::Vector3d& n) { return s_b - kernel(n); }, options);
  return {best.value, best.direction};
}

EntropicReport discord_general(const DensityMatrix& rho, const SphereSearchOptions& options) {
  const double mi = mutual_information(rho);
  const ClassicalOptimum c = classical_correlation_optimized(rho, options);
  return {mi, c.value, mi - c.value, c.direction};
}

double mutual_information_bd(const BellDiagonalState& s) {
  require_valid(s);
  const auto [a, b, c] = sorted_descending(s);
  // 4 lambda_k for the sorted triple; the sum sum_k lambda_k log2(4 lambda_k) is 2 - S.
  std::array<double, 4> w = {1.0 - a - b - c, 1.0 - a + b + c, 1.0 + a - b + c, 1.0 + a + b - c};
  std::sort(w.begin(), w.end());
  double sum = 0.0;
  for (double x : w) sum += 0.25 * xlog2x(x);
  return sum;
}

double classical_correlation_bd(const BellDiagonalState& s) {
  require_valid(s);
  const double c = max_abs_component(s);
  return 0.5 * (xlog2x(1.0 - c) + xlog2x(1.0 + c));
}

double discord_bd(const BellDiagonalState& s) {
  return mutual_information_bd(s) - classical_correlation_bd(s);
}

EntropicReport entropic_report_bd(const BellDiagonalState& s) {
  const double mi = mutual_information_bd(s);
  const double c = classical_correlation_bd(s);
  return {mi, c, mi - c, std::nullopt};
}

}  // namespace discord_lab
