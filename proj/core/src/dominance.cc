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

#include "discord_lab/dominance.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "discord_lab/entropic.h"
#include "discord_lab/geometric.h"
#include "discord_lab/parallel.h"

namespace discord_lab {

namespace {

constexpr std::array<std::string_view, 4> kClassNames = {"neither", "entropic_only",
                                                         "geometric_only", "both"};

constexpr std::array<BellDiagonalState, 4> kVertices = {{
    {1.0, 1.0, -1.0}, {-1.0, -1.0, -1.0}, {1.0, -1.0, 1.0}, {-1.0, 1.0, 1.0}}};

constexpr double kTwoPi = 2.0 * std::numbers::pi;

BellDiagonalState family_state(int family, double t) {
  switch (family) {
    case 1: {
      const double r = 0.01 * (2.0 + std::cos(4.0 * t));
      return {r * std::cos(t) - 0.25, r * std::sin(t) - 0.25, 0.01 * std::sin(4.0 * t) + 0.45};
    }
    case 2: {
      const double r = 0.015 * (2.0 + std::cos(4.0 * t));
      return {r * std::cos(t) - 0.75, r * std::sin(t) - 0.6, 0.015 * std::sin(4.0 * t) - 0.6};
    }
    case 3:
      return {t, -t, -t};
    default:
      throw std::invalid_argument("family must be 1, 2 or 3, got " + std::to_string(family));
  }
}

}  // namespace

std::string_view to_string(DominanceClass c) { return kClassNames[static_cast<int>(c)]; }

std::optional<DominanceClass> parse_dominance_class(std::string_view text) {
  for (DominanceClass c : kAllDominanceClasses) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

CorrelationReport correlation_report(const BellDiagonalState& s) {
  const EntropicReport e = entropic_report_bd(s);
  const GeometricReport g = geometric_report_bd(s);
  return {e.mutual_info, e.classical, e.discord, g.classical_g, g.discord_g};
}

DominanceClass classify(const CorrelationReport& r) {
  const bool entropic = r.discord_e > r.classical_e;
  const bool geometric = r.discord_g > r.classical_g;
  if (entropic && geometric) return DominanceClass::Both;
  if (entropic) return DominanceClass::EntropicOnly;
  if (geometric) return DominanceClass::GeometricOnly;
  return DominanceClass::Neither;
}

DominanceClass classify(const BellDiagonalState& s) { return classify(correlation_report(s)); }

bool entropic_dominant(const BellDiagonalState& s) {
  return discord_bd(s) > classical_correlation_bd(s);
}

bool geometric_dominant(const BellDiagonalState& s) {
  return geometric_discord_bd(s) > geometric_classical_bd(s);
}

BellDiagonalState sample_tetrahedron(RandomStream& rng, std::uint64_t& proposals) {
  while (true) {
    ++proposals;
    const double c1 = rng.uniform(-1.0, 1.0);
    const double c2 = rng.uniform(-1.0, 1.0);
    const double c3 = rng.uniform(-1.0, 1.0);
    const BellDiagonalState s{c1, c2, c3};
    const BellSpectrum l = bell_eigenvalues(s);
    if (std::all_of(l.lambda.begin(), l.lambda.end(), [](double x) { return x >= 0.0; })) return s;
  }
}

BellDiagonalState sample_tetrahedron(RandomStream& rng) {
  std::uint64_t ignored = 0;
  return sample_tetrahedron(rng, ignored);
}

BellDiagonalState sample_tetrahedron_barycentric(RandomStream& rng) {
  std::array<double, 3> u = {rng.uniform01(), rng.uniform01(), rng.uniform01()};
  std::sort(u.begin(), u.end());
  const std::array<double, 4> w = {u[0], u[1] - u[0], u[2] - u[1], 1.0 - u[2]};
  BellDiagonalState s{0.0, 0.0, 0.0};
  for (int k = 0; k < 4; ++k) {
    s.c1 += w[k] * kVertices[k].c1;
    s.c2 += w[k] * kVertices[k].c2;
    s.c3 += w[k] * kVertices[k].c3;
  }
  return s;
}

std::uint64_t ClassCounts::total() const {
  return by_class[0] + by_class[1] + by_class[2] + by_class[3];
}

std::uint64_t ClassCounts::entropic_dominant() const {
  return (*this)[DominanceClass::EntropicOnly] + (*this)[DominanceClass::Both];
}

std::uint64_t ClassCounts::geometric_dominant() const {
  return (*this)[DominanceClass::GeometricOnly] + (*this)[DominanceClass::Both];
}

ClassCounts& ClassCounts::operator+=(const ClassCounts& other) {
  for (int k = 0; k < 4; ++k) by_class[k] += other.by_class[k];
  return *this;
}

double SampleSummary::fraction(DominanceClass c) const {
  return static_cast<double>(counts[c]) / static_cast<double>(n);
}

double SampleSummary::entropic_fraction() const {
  return static_cast<double>(counts.entropic_dominant()) / static_cast<double>(n);
}

double SampleSummary::geometric_fraction() const {
  return static_cast<double>(counts.geometric_dominant()) / static_cast<double>(n);
}

SampleSummary monte_carlo_summary(std::uint64_t n, std::uint64_t seed,
                                  const MonteCarloOptions& options,
                                  std::vector<SampleRecord>* records) {
  if (n == 0) throw std::invalid_argument("monte_carlo_summary needs n >= 1");
  if (options.partition_size == 0) throw std::invalid_argument("partition size must be positive");
  const std::uint64_t p = options.partition_size;
  const std::uint64_t partitions = (n + p - 1) / p;

  std::vector<ClassCounts> partial(partitions);
  if (records != nullptr) records->assign(n, SampleRecord{});
  parallel_for(partitions, options.workers, [&](std::size_t k) {
    RandomStream rng(seed, k);
    const std::uint64_t begin = k * p;
    const std::uint64_t end = std::min(n, begin + p);
    for (std::uint64_t i = begin; i < end; ++i) {
      const BellDiagonalState s = sample_tetrahedron(rng);
      const CorrelationReport r = correlation_report(s);
      const DominanceClass c = classify(r);
      partial[k].add(c);
      if (records != nullptr) (*records)[i] = {s, r, c};
    }
  });

  SampleSummary summary{n, seed, p, {}};
  for (const ClassCounts& c : partial) summary.counts += c;
  return summary;
}

double grid_fraction(const StatePredicate& predicate, int resolution, int workers) {
  if (resolution < 101 || resolution % 2 == 0) {
    throw std::invalid_argument("grid resolution must be odd and at least 101, got " +
                                std::to_string(resolution));
  }
  const int last = resolution - 1;
  auto coord = [last](int i) { return static_cast<double>(2 * i - last) / last; };

  struct SliceCount {
    std::uint64_t inside = 0;
    std::uint64_t hits = 0;
  };
  std::vector<SliceCount> slices(resolution);
  parallel_for(resolution, workers, [&](std::size_t i) {
    SliceCount count;
    const double c1 = coord(static_cast<int>(i));
    for (int j = 0; j < resolution; ++j) {
      for (int k = 0; k < resolution; ++k) {
        const BellDiagonalState s{c1, coord(j), coord(k)};
        if (!is_valid(s)) continue;
        ++count.inside;
        if (predicate(s)) ++count.hits;
      }
    }
    slices[i] = count;
  });

  SliceCount total;
  for (const SliceCount& s : slices) {
    total.inside += s.inside;
    total.hits += s.hits;
  }
  return static_cast<double>(total.hits) / static_cast<double>(total.inside);
}

FamilyPoint family_point(int family, double t) {
  const bool periodic = (family == 1 || family == 2);
  if (family == 3 && !(t > 0.0 && t <= 1.0 / 3.0)) {
    throw std::domain_error("family 3 parameter must lie in (0, 1/3], got " + std::to_string(t));
  }
  if (periodic && !(t >= 0.0 && t <= kTwoPi)) {
    throw std::domain_error("family angle must lie in [0, 2pi], got " + std::to_string(t));
  }
  const BellDiagonalState s = family_state(family, t);
  const CorrelationReport r = correlation_report(s);  // validates s
  return {t, s, r.delta_e(), r.delta_g()};
}

std::vector<FamilyPoint> sweep_family(int family, int steps) {
  if (steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");
  if (family < 1 || family > 3) {
    throw std::invalid_argument("family must be 1, 2 or 3, got " + std::to_string(family));
  }
  std::vector<FamilyPoint> points;
  points.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double t = family == 3
                         ? (1.0 / 3.0) * (static_cast<double>(i + 1) / steps)
                         : kTwoPi * (static_cast<double>(i) / (steps - 1));
    points.push_back(family_point(family, t));
  }
  return points;
}

}  // namespace discord_lab
