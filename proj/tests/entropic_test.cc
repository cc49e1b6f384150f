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

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gtest/gtest.h"

#include "discord_lab/entropic.h"
#include "test_support.h"

namespace discord_lab {
namespace {

using testing::Gen;
using testing::max_abs_diff;

constexpr double kPi = std::numbers::pi;
// -sum lambda log2 lambda etc., from an mpmath evaluation.
constexpr double kEntropyHalfX = 1.81127812445913286;
constexpr double kMutualInfoHalfX = 0.188721875540867136;
constexpr double kBinaryEntropyQuarter = 0.811278124459132864;
constexpr double kClassicalThird = 0.0817041659455104852;

// Closed expressions written directly on the raw components, kept independent of the
// sorted evaluation used by the library.
double oracle_xlog2x(double x) { return x > 0 ? x * std::log2(x) : 0.0; }
double oracle_classical(const BellDiagonalState& s) {
  const double c = std::max({std::abs(s.c1), std::abs(s.c2), std::abs(s.c3)});
  return 0.5 * (oracle_xlog2x(1 - c) + oracle_xlog2x(1 + c));
}
double oracle_discord(const BellDiagonalState& s) {
  const double a = s.c1, b = s.c2, c = s.c3;
  return 0.25 * (oracle_xlog2x(1 - a - b - c) + oracle_xlog2x(1 - a + b + c) +
                 oracle_xlog2x(1 + a - b + c) + oracle_xlog2x(1 + a + b - c)) -
         oracle_classical(s);
}

DensityMatrix product_state(Gen& gen) {
  return DensityMatrix(kron(gen.density_matrix(2).matrix(), gen.density_matrix(2).matrix()));
}

TEST(MutualInformation, Examples) {
  Gen gen(1);
  for (int trial = 0; trial < 20; ++trial) EXPECT_NEAR(mutual_information(product_state(gen)), 0.0, 1e-12);
  EXPECT_NEAR(mutual_information(to_density_matrix({1, 1, -1})), 2.0, 1e-12);
  EXPECT_NEAR(mutual_information(to_density_matrix({0.5, 0, 0})), kMutualInfoHalfX, 1e-12);
  EXPECT_THROW(mutual_information(DensityMatrix::maximally_mixed(2)), std::domain_error);
}

TEST(ConditionalEntropy, Examples) {
  EXPECT_NEAR(conditional_entropy(DensityMatrix::maximally_mixed(4)), 1.0, 1e-12);
  EXPECT_NEAR(conditional_entropy(to_density_matrix({1, 1, -1})), -1.0, 1e-12);
  Gen gen(2);
  const DensityMatrix pure_b = DensityMatrix::pure(gen.pure_vector(2));
  const DensityMatrix rho(kron(identity(2) / 2.0, pure_b.matrix()));
  EXPECT_NEAR(conditional_entropy(rho), 0.0, 1e-12);
}

TEST(ConditionalEntropy, MutualInformationIdentity) {
  Gen gen(3);
  for (int trial = 0; trial < 200; ++trial) {
    const DensityMatrix rho = gen.density_matrix(4);
    const double s_b = von_neumann_entropy(partial_trace(rho, Subsystem::A));
    EXPECT_NEAR(mutual_information(rho), s_b - conditional_entropy(rho), 1e-10);
    EXPECT_GE(mutual_information(rho), -1e-10);
  }
}

TEST(MeasureBranch, BellDiagonalBranchesAreEquiprobable) {
  Gen gen(4);
  for (int trial = 0; trial < 200; ++trial) {
    const DensityMatrix rho = to_density_matrix(gen.bell_state());
    const ConditionalEnsemble e = measure_branch(rho, gen.direction());
    for (const auto& b : e.branches) {
      EXPECT_NEAR(b.probability, 0.5, 1e-12);
      EXPECT_NEAR(b.state.matrix().trace().real(), 1.0, 1e-12);
    }
  }
}

TEST(MeasureBranch, BellStateAlongZ) {
  const ConditionalEnsemble e = measure_branch(to_density_matrix({1, 1, -1}), MeasurementDirection::z_axis());
  ComplexMatrix ket0 = ComplexMatrix::Zero(2, 2), ket1 = ComplexMatrix::Zero(2, 2);
  ket0(0, 0) = 1.0;
  ket1(1, 1) = 1.0;
  EXPECT_LT(max_abs_diff(e.branches[0].state.matrix(), ket1), 1e-15);
  EXPECT_LT(max_abs_diff(e.branches[1].state.matrix(), ket0), 1e-15);
}

TEST(MeasureBranch, MaximallyMixed) {
  Gen gen(5);
  const ConditionalEnsemble e = measure_branch(DensityMatrix::maximally_mixed(4), gen.direction());
  for (const auto& b : e.branches) {
    EXPECT_NEAR(b.probability, 0.5, 1e-15);
    EXPECT_LT(max_abs_diff(b.state.matrix(), identity(2) / 2.0), 1e-15);
  }
}

TEST(MeasureBranch, ZeroProbabilityBranch) {
  // A in |0>, measured along z: the minus outcome never occurs.
  Gen gen(6);
  ComplexMatrix ket0 = ComplexMatrix::Zero(2, 2);
  ket0(0, 0) = 1.0;
  const DensityMatrix rho(kron(ket0, gen.density_matrix(2).matrix()));
  const ConditionalEnsemble e = measure_branch(rho, MeasurementDirection::z_axis());
  EXPECT_NEAR(e.branches[0].probability, 1.0, 1e-15);
  EXPECT_EQ(e.branches[1].probability, 0.0);
  EXPECT_LT(max_abs_diff(e.branches[1].state.matrix(), identity(2) / 2.0), 1e-15);
}

TEST(MeasuredConditionalEntropy, Examples) {
  Gen gen(7);
  EXPECT_NEAR(measured_conditional_entropy(DensityMatrix::maximally_mixed(4), gen.direction()), 1.0, 1e-12);
  const DensityMatrix bell = to_density_matrix({1, 1, -1});
  for (int i = 0; i <= 8; ++i) {
    for (int j = 0; j < 16; ++j) {
      const MeasurementDirection d{kPi * i / 8, 2 * kPi * j / 16};
      EXPECT_NEAR(measured_conditional_entropy(bell, d), 0.0, 1e-7);
    }
  }
  EXPECT_NEAR(measured_conditional_entropy(to_density_matrix({0.5, 0, 0}), MeasurementDirection::x_axis()),
              kBinaryEntropyQuarter, 1e-12);
}

TEST(InducedMutualInformation, Examples) {
  Gen gen(8);
  EXPECT_NEAR(induced_mutual_information(DensityMatrix::maximally_mixed(4), gen.direction()), 0.0, 1e-12);
  const DensityMatrix rho = to_density_matrix({0.5, 0, 0});
  EXPECT_NEAR(induced_mutual_information(rho, MeasurementDirection::x_axis()), kMutualInfoHalfX, 1e-12);
  EXPECT_NEAR(induced_mutual_information(rho, MeasurementDirection::z_axis()), 0.0, 1e-12);
}

TEST(InducedMutualInformation, NeverExceedsMutualInformation) {
  Gen gen(9);
  for (int trial = 0; trial < 300; ++trial) {
    const DensityMatrix rho = trial % 2 ? gen.density_matrix(4) : to_density_matrix(gen.bell_state());
    const MeasurementDirection d = gen.direction();
    EXPECT_LE(induced_mutual_information(rho, d), mutual_information(rho) + 1e-9);
  }
}

TEST(ClassicalCorrelationOptimized, Examples) {
  EXPECT_NEAR(classical_correlation_optimized(DensityMatrix::maximally_mixed(4)).value, 0.0, 1e-12);

  const ClassicalOptimum half_x = classical_correlation_optimized(to_density_matrix({0.5, 0, 0}));
  EXPECT_NEAR(half_x.value, kMutualInfoHalfX, 1e-10);
  EXPECT_NEAR(std::abs(half_x.direction.bloch().x()), 1.0, 1e-9);

  const ClassicalOptimum face = classical_correlation_optimized(to_density_matrix({1.0 / 3, -1.0 / 3, -1.0 / 3}));
  EXPECT_NEAR(face.value, kClassicalThird, 1e-10);
}

TEST(ClassicalCorrelationOptimized, ValueMatchesReportedDirection) {
  // The optimizer's internal kernel must agree with the measure_branch route.
  Gen gen(10);
  for (int trial = 0; trial < 30; ++trial) {
    const DensityMatrix rho = trial % 2 ? gen.density_matrix(4) : to_density_matrix(gen.bell_state());
    const ClassicalOptimum best = classical_correlation_optimized(rho);
    EXPECT_NEAR(induced_mutual_information(rho, best.direction), best.value, 1e-12);
  }
}

TEST(ClassicalCorrelationOptimized, BeatsBruteForceScanOnGeneralStates) {
  Gen gen(11);
  for (int trial = 0; trial < 5; ++trial) {
    const DensityMatrix rho = gen.density_matrix(4);
    double scan = -1.0;
    for (int i = 0; i <= 40; ++i)
      for (int j = 0; j < 80; ++j)
        scan = std::max(scan, induced_mutual_information(rho, {kPi * i / 40, 2 * kPi * j / 80}));
    const double best = classical_correlation_optimized(rho).value;
    EXPECT_GE(best, scan - 1e-12);
    EXPECT_LE(best, scan + 1e-3);
  }
}

TEST(DiscordGeneral, Examples) {
  Gen gen(12);
  for (int trial = 0; trial < 5; ++trial) {
    const EntropicReport r = discord_general(product_state(gen));
    EXPECT_NEAR(r.mutual_info, 0.0, 1e-12);
    EXPECT_NEAR(r.classical, 0.0, 1e-12);
    EXPECT_NEAR(r.discord, 0.0, 1e-12);
  }
  const EntropicReport bell = discord_general(to_density_matrix({1, 1, -1}));
  EXPECT_NEAR(bell.mutual_info, 2.0, 1e-12);
  EXPECT_NEAR(bell.classical, 1.0, 1e-10);
  EXPECT_NEAR(bell.discord, 1.0, 1e-10);
  ASSERT_TRUE(bell.optimal_direction.has_value());

  EXPECT_NEAR(discord_general(to_density_matrix({0.5, 0, 0})).discord, 0.0, 1e-10);
}

TEST(DiscordGeneral, ReportInvariants) {
  Gen gen(13);
  for (int trial = 0; trial < 20; ++trial) {
    const EntropicReport r = discord_general(gen.density_matrix(4));
    EXPECT_NEAR(r.mutual_info, r.classical + r.discord, 1e-9);
    EXPECT_GE(r.classical, -1e-9);
    EXPECT_GE(r.discord, -1e-9);
  }
}

TEST(ClosedForms, Examples) {
  EXPECT_EQ(classical_correlation_bd({0, 0, 0}), 0.0);
  EXPECT_EQ(classical_correlation_bd({1, 1, -1}), 1.0);
  EXPECT_NEAR(classical_correlation_bd({1.0 / 3, -1.0 / 3, -1.0 / 3}), kClassicalThird, 1e-15);
  EXPECT_EQ(discord_bd({0, 0, 0}), 0.0);
  EXPECT_NEAR(discord_bd({1, 1, -1}), 1.0, 1e-15);
  EXPECT_NEAR(discord_bd({1.0 / 3, -1.0 / 3, -1.0 / 3}), 1.0 / 3, 1e-14);
  EXPECT_THROW(discord_bd({0.5, 0.5, 0.5}), std::domain_error);
  EXPECT_THROW(classical_correlation_bd({0.5, 0.5, 0.5}), std::domain_error);
}

TEST(ClosedForms, MatchDefinitionalOracle) {
  Gen gen(14);
  for (int trial = 0; trial < 10000; ++trial) {
    const BellDiagonalState s = gen.bell_state();
    EXPECT_NEAR(classical_correlation_bd(s), oracle_classical(s), 1e-14);
    EXPECT_NEAR(discord_bd(s), oracle_discord(s), 1e-14);
  }
}

TEST(ClosedForms, DecompositionAgainstEigenRoute) {
  Gen gen(15);
  for (int trial = 0; trial < 1000; ++trial) {
    const BellDiagonalState s = gen.bell_state();
    EXPECT_NEAR(classical_correlation_bd(s) + discord_bd(s), mutual_information(to_density_matrix(s)), 1e-10);
  }
}

TEST(ClosedForms, AgreeWithOptimizer) {
  Gen gen(16);
  for (int trial = 0; trial < 100; ++trial) {
    const BellDiagonalState s = gen.bell_state();
    const DensityMatrix rho = to_density_matrix(s);
    EXPECT_NEAR(classical_correlation_bd(s), classical_correlation_optimized(rho).value, 1e-4);
    EXPECT_NEAR(discord_bd(s), discord_general(rho).discord, 1e-4);
  }
}

TEST(ClosedForms, Symmetries) {
  Gen gen(17);
  for (int trial = 0; trial < 10000; ++trial) {
    const BellDiagonalState s = gen.bell_state();
    std::array<double, 3> c = s.components();
    std::sort(c.begin(), c.end());
    const double d0 = discord_bd(s), c0 = classical_correlation_bd(s), i0 = mutual_information_bd(s);
    do {
      const BellDiagonalState p{c[0], c[1], c[2]};
      EXPECT_EQ(discord_bd(p), d0);
      EXPECT_EQ(classical_correlation_bd(p), c0);
      EXPECT_EQ(mutual_information_bd(p), i0);
    } while (std::next_permutation(c.begin(), c.end()));
    for (const BellDiagonalState f : {BellDiagonalState{-s.c1, -s.c2, s.c3}, BellDiagonalState{-s.c1, s.c2, -s.c3},
                                      BellDiagonalState{s.c1, -s.c2, -s.c3}}) {
      EXPECT_NEAR(discord_bd(f), d0, 1e-12);
      EXPECT_NEAR(classical_correlation_bd(f), c0, 1e-12);
      EXPECT_NEAR(mutual_information_bd(f), i0, 1e-12);
    }
  }
}

TEST(ClosedForms, NonNegative) {
  Gen gen(18);
  for (int trial = 0; trial < 10000; ++trial) {
    const BellDiagonalState s = gen.bell_state();
    EXPECT_GE(discord_bd(s), -1e-12);
    EXPECT_GE(classical_correlation_bd(s), 0.0);
  }
}

TEST(ClosedForms, SingleComponentStatesHaveNoDiscord) {
  for (int i = 0; i <= 200; ++i) {
    const double c = -1.0 + i / 100.0;
    for (const BellDiagonalState s : {BellDiagonalState{c, 0, 0}, BellDiagonalState{0, c, 0}, BellDiagonalState{0, 0, c}}) {
      EXPECT_NEAR(discord_bd(s), 0.0, 1e-10);
    }
  }
}

}  // namespace
}  // namespace discord_lab
