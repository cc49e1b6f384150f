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

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "CLI11.hpp"
#include "json.hpp"

#include "discord_lab/entropic.h"
#include "discord_lab/geometric.h"
#include "discord_lab/parallel.h"

namespace discord_lab::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kMeasureCsvDigits = 6;

// Thrown for command-line problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, sep)) fields.push_back(field);
  if (!line.empty() && line.back() == sep) fields.emplace_back();
  return fields;
}

double parse_double(const std::string& text) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw std::runtime_error("not a number: '" + text + "'");
  }
  return v;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

// Output target: a file when a path is given, otherwise the fallback stream.
class Sink {
 public:
  Sink(const std::optional<std::string>& path, std::ostream& fallback) : stream_(&fallback) {
    if (path) {
      file_.open(*path, std::ios::binary | std::ios::trunc);
      if (!file_) throw std::runtime_error("cannot open output file '" + *path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }
  void finish(const std::optional<std::string>& path) {
    stream_->flush();
    if (!*stream_) throw std::runtime_error("failed writing output" + (path ? " '" + *path + "'" : ""));
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

Json report_json(const CorrelationReport& r) {
  Json j;
  j["mutual_info"] = r.mutual_info;
  j["classical_e"] = r.classical_e;
  j["discord_e"] = r.discord_e;
  j["classical_g"] = r.classical_g;
  j["discord_g"] = r.discord_g;
  j["delta_e"] = r.delta_e();
  j["delta_g"] = r.delta_g();
  j["class"] = std::string(to_string(classify(r)));
  return j;
}

Json counts_json(const ClassCounts& c) {
  Json j;
  for (DominanceClass k : kAllDominanceClasses) j[std::string(to_string(k))] = c[k];
  j["entropic_dominant"] = c.entropic_dominant();
  j["geometric_dominant"] = c.geometric_dominant();
  return j;
}

void write_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

// measure --------------------------------------------------------------------

void run_measure(const RunConfig& cfg, std::ostream& out) {
  if (auto why = violated_constraint(cfg.state)) throw std::domain_error("invalid state: " + *why);
  const CorrelationReport r = correlation_report(cfg.state);
  Sink sink(cfg.out, out);
  std::ostream& os = sink.stream();
  if (cfg.format == Format::Json) {
    Json j;
    j["command"] = "measure";
    j["parameters"] = {{"c1", cfg.state.c1}, {"c2", cfg.state.c2}, {"c3", cfg.state.c3}};
    j["report"] = report_json(r);
    write_json(os, j);
  } else {
    auto f = [](double v) { return format_significant(v, kMeasureCsvDigits); };
    os << kDumpHeader << '\n'
       << f(cfg.state.c1) << ',' << f(cfg.state.c2) << ',' << f(cfg.state.c3) << ',' << f(r.mutual_info)
       << ',' << f(r.classical_e) << ',' << f(r.discord_e) << ',' << f(r.classical_g) << ','
       << f(r.discord_g) << ',' << f(r.delta_e()) << ',' << f(r.delta_g()) << ','
       << to_string(classify(r)) << '\n';
  }
  sink.finish(cfg.out);
}

// sample ---------------------------------------------------------------------

void run_sample(const RunConfig& cfg, std::ostream& out) {
  std::vector<SampleRecord> records;
  const SampleSummary s =
      monte_carlo_summary(cfg.n, cfg.seed, MonteCarloOptions{}, cfg.dump ? &records : nullptr);

  if (cfg.dump) {
    Sink dump(cfg.dump, out);
    write_dump_csv(dump.stream(), records);
    dump.finish(cfg.dump);
  }

  Sink sink(cfg.out, out);
  std::ostream& os = sink.stream();
  if (cfg.format == Format::Json) {
    Json j;
    j["command"] = "sample";
    j["parameters"] = {{"n", s.n}, {"seed", s.seed}, {"partition_size", s.partition_size}};
    Json fractions;
    for (DominanceClass k : kAllDominanceClasses) fractions[std::string(to_string(k))] = s.fraction(k);
    fractions["entropic_dominant"] = s.entropic_fraction();
    fractions["geometric_dominant"] = s.geometric_fraction();
    j["summary"] = {{"counts", counts_json(s.counts)}, {"fractions", fractions}};
    write_json(os, j);
  } else {
    os << "n,seed,partition_size,quantity,count,fraction\n";
    auto row = [&](std::string_view name, std::uint64_t count) {
      os << s.n << ',' << s.seed << ',' << s.partition_size << ',' << name << ',' << count << ','
         << format_shortest(static_cast<double>(count) / static_cast<double>(s.n)) << '\n';
    };
    for (DominanceClass k : kAllDominanceClasses) row(to_string(k), s.counts[k]);
    row("entropic_dominant", s.counts.entropic_dominant());
    row("geometric_dominant", s.counts.geometric_dominant());
  }
  sink.finish(cfg.out);
}

// sweep ----------------------------------------------------------------------

void run_sweep(const RunConfig& cfg, std::ostream& out) {
  const std::vector<FamilyPoint> points = sweep_family(cfg.family, cfg.steps);
  Sink sink(cfg.out, out);
  std::ostream& os = sink.stream();
  if (cfg.format == Format::Json) {
    Json j;
    j["command"] = "sweep";
    j["parameters"] = {{"family", cfg.family}, {"steps", cfg.steps}};
    Json rows = Json::array();
    for (const FamilyPoint& p : points) {
      rows.push_back({{"t", p.t}, {"c1", p.state.c1}, {"c2", p.state.c2}, {"c3", p.state.c3},
                      {"delta_e", p.delta_e}, {"delta_g", p.delta_g}});
    }
    j["points"] = rows;
    write_json(os, j);
  } else {
    write_sweep_csv(os, cfg.family, points);
  }
  sink.finish(cfg.out);
}

// verify ---------------------------------------------------------------------

struct CheckResult {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  std::optional<BellDiagonalState> worst;
  bool passed() const { return deviation <= tolerance; }
};

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  RandomStream rng(cfg.seed, 0);
  std::vector<BellDiagonalState> states(cfg.verify_samples);
  for (auto& s : states) s = sample_tetrahedron(rng);

  std::vector<double> dev_classical(states.size()), dev_geometric(states.size());
  parallel_for(states.size(), 0, [&](std::size_t i) {
    const DensityMatrix rho = to_density_matrix(states[i]);
    dev_classical[i] =
        std::abs(classical_correlation_bd(states[i]) - classical_correlation_optimized(rho).value);
    dev_geometric[i] = std::abs(geometric_discord_bd(states[i]) - geometric_discord_oracle(states[i]));
  });

  auto worst_of = [&](const std::vector<double>& dev, std::string name, double tol) {
    const auto it = std::max_element(dev.begin(), dev.end());
    return CheckResult{std::move(name), *it, tol, states[it - dev.begin()]};
  };
  std::vector<CheckResult> checks;
  checks.push_back(worst_of(dev_classical, "classical_closed_form_vs_optimized", kClassicalTolerance));
  checks.push_back(
      worst_of(dev_geometric, "geometric_discord_closed_form_vs_oracle", kGeometricDiscordTolerance));

  const SampleSummary mc = monte_carlo_summary(cfg.verify_mc_samples, cfg.seed);
  const double lattice = grid_fraction(geometric_dominant, cfg.grid);
  checks.push_back({"geometric_fraction_monte_carlo_vs_grid", std::abs(mc.geometric_fraction() - lattice),
                    kGeometricFractionTolerance, std::nullopt});

  Sink sink(cfg.out, out);
  std::ostream& os = sink.stream();
  if (cfg.format == Format::Json) {
    Json j;
    j["command"] = "verify";
    j["parameters"] = {{"samples", cfg.verify_samples}, {"grid", cfg.grid}, {"seed", cfg.seed},
                       {"mc_samples", cfg.verify_mc_samples}};
    Json list = Json::array();
    for (const CheckResult& c : checks) {
      Json item = {{"check", c.name}, {"max_deviation", c.deviation}, {"tolerance", c.tolerance},
                   {"passed", c.passed()}};
      if (c.worst) item["worst_state"] = {c.worst->c1, c.worst->c2, c.worst->c3};
      list.push_back(item);
    }
    j["checks"] = list;
    j["monte_carlo_geometric_fraction"] = mc.geometric_fraction();
    j["grid_geometric_fraction"] = lattice;
    write_json(os, j);
  } else {
    os << "samples,grid,seed,mc_samples,check,max_deviation,tolerance,passed,worst_c1,worst_c2,worst_c3\n";
    for (const CheckResult& c : checks) {
      os << cfg.verify_samples << ',' << cfg.grid << ',' << cfg.seed << ',' << cfg.verify_mc_samples << ','
         << c.name << ',' << format_shortest(c.deviation) << ',' << format_shortest(c.tolerance) << ','
         << (c.passed() ? "true" : "false") << ',';
      if (c.worst) {
        os << format_shortest(c.worst->c1) << ',' << format_shortest(c.worst->c2) << ','
           << format_shortest(c.worst->c3);
      } else {
        os << ",,";
      }
      os << '\n';
    }
  }
  sink.finish(cfg.out);

  bool ok = true;
  for (const CheckResult& c : checks) {
    if (c.passed()) continue;
    ok = false;
    err << "verify: " << c.name << " deviation " << format_shortest(c.deviation) << " exceeds "
        << format_shortest(c.tolerance);
    if (c.worst) {
      err << " at (c1, c2, c3) = (" << format_shortest(c.worst->c1) << ", "
          << format_shortest(c.worst->c2) << ", " << format_shortest(c.worst->c3) << ")";
    }
    err << '\n';
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

// parsing --------------------------------------------------------------------

void add_format(CLI::App* app, Format& format) {
  static const std::map<std::string, Format> kFormats = {{"csv", Format::Csv}, {"json", Format::Json}};
  app->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->default_str("csv");
}

}  // namespace

std::string format_shortest(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

std::string format_significant(double v, int digits) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, digits);
  return std::string(buf, end);
}

void write_dump_csv(std::ostream& os, const std::vector<SampleRecord>& records) {
  os << kDumpHeader << '\n';
  for (const SampleRecord& r : records) {
    const CorrelationReport& m = r.report;
    for (double v : {r.state.c1, r.state.c2, r.state.c3, m.mutual_info, m.classical_e, m.discord_e,
                     m.classical_g, m.discord_g, m.delta_e(), m.delta_g()}) {
      os << format_shortest(v) << ',';
    }
    os << to_string(r.cls) << '\n';
  }
}

std::vector<SampleRecord> parse_dump_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || strip_cr(line) != kDumpHeader) {
    throw std::runtime_error("dump CSV: missing or unexpected header");
  }
  std::vector<SampleRecord> records;
  while (std::getline(is, line)) {
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 11) throw std::runtime_error("dump CSV: expected 11 fields in '" + line + "'");
    SampleRecord r;
    r.state = {parse_double(f[0]), parse_double(f[1]), parse_double(f[2])};
    r.report = {parse_double(f[3]), parse_double(f[4]), parse_double(f[5]), parse_double(f[6]),
                parse_double(f[7])};
    const auto cls = parse_dominance_class(f[10]);
    if (!cls) throw std::runtime_error("dump CSV: unknown class '" + f[10] + "'");
    r.cls = *cls;
    records.push_back(r);
  }
  return records;
}

void write_sweep_csv(std::ostream& os, int family, const std::vector<FamilyPoint>& points) {
  os << "# discord_lab sweep family=" << family << " steps=" << points.size() << '\n';
  os << kSweepHeader << '\n';
  for (const FamilyPoint& p : points) {
    os << format_shortest(p.t) << ',' << format_shortest(p.state.c1) << ',' << format_shortest(p.state.c2)
       << ',' << format_shortest(p.state.c3) << ',' << format_shortest(p.delta_e) << ','
       << format_shortest(p.delta_g) << '\n';
  }
}

std::vector<FamilyPoint> parse_sweep_csv(std::istream& is) {
  std::string line;
  bool header = false;
  std::vector<FamilyPoint> points;
  while (std::getline(is, line)) {
    line = strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != kSweepHeader) throw std::runtime_error("sweep CSV: unexpected header '" + line + "'");
      header = true;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 6) throw std::runtime_error("sweep CSV: expected 6 fields in '" + line + "'");
    points.push_back({parse_double(f[0]),
                      {parse_double(f[1]), parse_double(f[2]), parse_double(f[3])},
                      parse_double(f[4]),
                      parse_double(f[5])});
  }
  if (!header) throw std::runtime_error("sweep CSV: missing header");
  return points;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Entropic and geometric correlation measures of two-qubit Bell-diagonal states",
               "discord_lab"};
  app.require_subcommand(1);

  auto* measure = app.add_subcommand("measure", "Correlation measures of one Bell-diagonal state");
  std::vector<double> coords;
  std::optional<double> c1, c2, c3;
  measure->add_option("coords", coords, "c1 c2 c3 as positional values")->expected(3);
  measure->add_option("--c1", c1, "Coefficient of σx⊗σx");
  measure->add_option("--c2", c2, "Coefficient of σy⊗σy");
  measure->add_option("--c3", c3, "Coefficient of σz⊗σz");
  add_format(measure, cfg.format);
  measure->add_option("--out", cfg.out, "Write to a file instead of standard output");

  auto* sample = app.add_subcommand("sample", "Monte Carlo dominance statistics over the tetrahedron");
  sample->add_option("--n", cfg.n, "Number of uniform samples")->check(CLI::PositiveNumber)->default_val(kDefaultSamples);
  sample->add_option("--seed", cfg.seed, "RNG seed")->default_val(kDefaultSeed);
  sample->add_option("--dump", cfg.dump, "Write every sample to this CSV file");
  sample->add_option("--out", cfg.out, "Write the summary to a file instead of standard output");
  add_format(sample, cfg.format);

  auto* sweep = app.add_subcommand("sweep", "Dominance deltas along one of the example families");
  sweep->add_option("--family", cfg.family, "Family 1, 2 or 3")->check(CLI::IsMember({1, 2, 3}))->default_val(1);
  sweep->add_option("--steps", cfg.steps, "Number of points (at least 2)")->check(CLI::Range(2, 100000000))->default_val(629);
  sweep->add_option("--out", cfg.out, "Write to a file instead of standard output");
  add_format(sweep, cfg.format);

  auto* verify = app.add_subcommand("verify", "Closed forms against the optimization oracles");
  verify->add_option("--samples", cfg.verify_samples, "Random states for the oracle comparisons")
      ->check(CLI::PositiveNumber)->default_val(1000);
  verify->add_option("--grid", cfg.grid, "Lattice resolution per axis (odd, at least 101)")
      ->check(CLI::Validator(
          [](std::string& v) -> std::string {
            int g = 0;
            const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), g);
            if (ec != std::errc() || end != v.data() + v.size()) return "grid must be an integer";
            if (g < 101 || g % 2 == 0) return "grid must be odd and at least 101";
            return {};
          },
          "ODD>=101"))
      ->default_val(201);
  verify->add_option("--seed", cfg.seed, "RNG seed")->default_val(kDefaultSeed);
  verify->add_option("--mc-samples", cfg.verify_mc_samples, "Monte Carlo samples for the fraction check")
      ->check(CLI::PositiveNumber)->default_val(kDefaultSamples);
  verify->add_option("--out", cfg.out, "Write to a file instead of standard output");
  add_format(verify, cfg.format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (measure->parsed()) {
      cfg.command = Command::Measure;
      const bool named = c1 || c2 || c3;
      if (!coords.empty() && named) throw UsageError("give the state either positionally or with --c1/--c2/--c3");
      if (coords.empty()) {
        if (!(c1 && c2 && c3)) throw UsageError("measure needs --c1, --c2 and --c3");
        cfg.state = {*c1, *c2, *c3};
      } else {
        cfg.state = {coords[0], coords[1], coords[2]};
      }
    } else if (sample->parsed()) {
      cfg.command = Command::Sample;
    } else if (sweep->parsed()) {
      cfg.command = Command::Sweep;
    } else {
      cfg.command = Command::Verify;
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    switch (cfg.command) {
      case Command::Measure: run_measure(cfg, out); return kExitOk;
      case Command::Sample: run_sample(cfg, out); return kExitOk;
      case Command::Sweep: run_sweep(cfg, out); return kExitOk;
      case Command::Verify: return run_verify(cfg, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace discord_lab::cli
