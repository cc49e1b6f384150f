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

// Command-line front end: measure | sample | sweep | verify.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "discord_lab/dominance.h"

namespace discord_lab::cli {

enum class Command { Measure, Sample, Sweep, Verify };
enum class Format { Csv, Json };

enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,          // invalid state, unwritable output, bad environment
  kExitUsage = 2,          // malformed command line
  kExitVerifyFailed = 3,   // a verification tolerance was exceeded
};

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::uint64_t kDefaultSamples = 100000;

inline constexpr double kClassicalTolerance = 1e-4;
inline constexpr double kGeometricDiscordTolerance = 1e-6;
inline constexpr double kGeometricFractionTolerance = 0.005;

struct RunConfig {
  Command command = Command::Measure;
  Format format = Format::Csv;
  std::optional<std::string> out;  // standard output when empty

  // measure
  BellDiagonalState state;
  // sample
  std::uint64_t n = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::string> dump;
  // sweep
  int family = 1;
  int steps = 629;
  // verify
  std::uint64_t verify_samples = 1000;
  int grid = 201;
  std::uint64_t verify_mc_samples = kDefaultSamples;
};

/// Full run: parse, execute, map errors to exit codes. Regular output goes to
/// `out` (unless redirected with --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest decimal that parses back to exactly v.
std::string format_shortest(double v);
/// v with `digits` significant digits.
std::string format_significant(double v, int digits);

inline constexpr std::string_view kDumpHeader =
    "c1,c2,c3,mutual_info,classical_e,discord_e,classical_g,discord_g,delta_e,delta_g,class";
inline constexpr std::string_view kSweepHeader = "t,c1,c2,c3,delta_e,delta_g";

/// One row per record under kDumpHeader, shortest round-trip numbers.
void write_dump_csv(std::ostream& os, const std::vector<SampleRecord>& records);
/// Throws std::runtime_error on a malformed document.
std::vector<SampleRecord> parse_dump_csv(std::istream& is);

void write_sweep_csv(std::ostream& os, int family, const std::vector<FamilyPoint>& points);
/// Skips '#' comment lines. Throws std::runtime_error on a malformed document.
std::vector<FamilyPoint> parse_sweep_csv(std::istream& is);

}  // namespace discord_lab::cli
