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

// Dominance of quantum over classical correlations on the tetrahedron of
// Bell-diagonal states: classification, Monte Carlo tallies, a deterministic
// lattice estimate of the same volume fractions, and the three one-parameter
// example families.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "discord_lab/bell_state.h"
#include "discord_lab/random_stream.h"

namespace discord_lab {

enum class DominanceClass { Neither = 0, EntropicOnly = 1, GeometricOnly = 2, Both = 3 };

inline constexpr std::array<DominanceClass, 4> kAllDominanceClasses = {
    DominanceClass::Neither, DominanceClass::EntropicOnly, DominanceClass::GeometricOnly,
    DominanceClass::Both};

/// "neither", "entropic_only", "geometric_only", "both".
std::string_view to_string(DominanceClass c);
std::optional<DominanceClass> parse_dominance_class(std::string_view text);

/// The five correlation measures of one state, from the closed forms.
struct CorrelationReport {
  double mutual_info = 0.0;   // I, bits
  double classical_e = 0.0;   // C_A, bits
  double discord_e = 0.0;     // D_A, bits
  double classical_g = 0.0;   // C_A^G
  double discord_g = 0.0;     // D_A^G

  double delta_e() const { return discord_e - classical_e; }
  double delta_g() const { return discord_g - classical_g; }
};

/// Throws std::domain_error for an invalid state.
CorrelationReport correlation_report(const BellDiagonalState& s);

/// Strict inequalities; a tie counts as not dominant.
DominanceClass classify(const CorrelationReport& r);
DominanceClass classify(const BellDiagonalState& s);

bool entropic_dominant(const BellDiagonalState& s);
bool geometric_dominant(const BellDiagonalState& s);

/// Uniform point of the tetrahedron by rejection from the cube [-1, 1]^3.
/// `proposals` is incremented once per cube point drawn.
BellDiagonalState sample_tetrahedron(RandomStream& rng, std::uint64_t& proposals);
BellDiagonalState sample_tetrahedron(RandomStream& rng);

/// Uniform point of the tetrahedron as a convex combination of its vertices
/// with weights given by the spacings of three sorted uniforms.
BellDiagonalState sample_tetrahedron_barycentric(RandomStream& rng);

struct ClassCounts {
  std::array<std::uint64_t, 4> by_class{};

  std::uint64_t operator[](DominanceClass c) const { return by_class[static_cast<int>(c)]; }
  std::uint64_t total() const;
  std::uint64_t entropic_dominant() const;
  std::uint64_t geometric_dominant() const;
  ClassCounts& operator+=(const ClassCounts& other);
  void add(DominanceClass c) { ++by_class[static_cast<int>(c)]; }
};

struct SampleSummary {
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t partition_size = 0;
  ClassCounts counts;

  double fraction(DominanceClass c) const;
  double entropic_fraction() const;
  double geometric_fraction() const;
};

struct SampleRecord {
  BellDiagonalState state;
  CorrelationReport report;
  DominanceClass cls = DominanceClass::Neither;
};

inline constexpr std::uint64_t kDefaultPartitionSize = 4096;

struct MonteCarloOptions {
  /// 0 means worker_count().
  int workers = 0;
  /// Samples [k P, (k + 1) P) come from RandomStream(seed, k).
  std::uint64_t partition_size = kDefaultPartitionSize;
};

/// Classifies n uniform samples. The result depends only on (n, seed,
/// partition_size); the worker count does not affect it. When `records` is
/// non-null it receives every sample in index order. Throws
/// std::invalid_argument for n = 0 or partition_size = 0.
SampleSummary monte_carlo_summary(std::uint64_t n, std::uint64_t seed,
                                  const MonteCarloOptions& options = {},
                                  std::vector<SampleRecord>* records = nullptr);

using StatePredicate = std::function<bool(const BellDiagonalState&)>;

/// Fraction of the lattice points of [-1, 1]^3 (resolution per axis, spacing
/// 2 / (resolution - 1)) that lie in the tetrahedron and satisfy the
/// predicate, relative to all lattice points in the tetrahedron. Throws
/// std::invalid_argument unless resolution is odd and at least 101.
double grid_fraction(const StatePredicate& predicate, int resolution, int workers = 0);

struct FamilyPoint {
  double t = 0.0;  // α for families 1 and 2, c1 for family 3
  BellDiagonalState state;
  double delta_e = 0.0;
  double delta_g = 0.0;
};

/// Family 1: c = (0.01 (2 + cos 4α) cos α - 0.25, 0.01 (2 + cos 4α) sin α - 0.25, 0.01 sin 4α + 0.45)
/// Family 2: c = (0.015 (2 + cos 4α) cos α - 0.75, 0.015 (2 + cos 4α) sin α - 0.6, 0.015 sin 4α - 0.6)
/// Both with α in [0, 2π].
/// Family 3: c = (t, -t, -t), t in (0, 1/3].
/// Throws std::invalid_argument for an unknown family and std::domain_error
/// for t out of range or an invalid resulting state.
FamilyPoint family_point(int family, double t);

/// Families 1 and 2: α_i = 2π i / (steps - 1), i = 0..steps-1.
/// Family 3: t_i = (1/3) i / steps, i = 1..steps.
/// Throws std::invalid_argument for steps < 2.
std::vector<FamilyPoint> sweep_family(int family, int steps);

}  // namespace discord_lab
