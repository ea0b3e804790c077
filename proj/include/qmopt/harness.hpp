#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "qmopt/problems.hpp"

namespace qmopt::harness {

struct RunConfig {
  ProblemKind problem = ProblemKind::Beamforming;
  DimMap dims;
  std::uint64_t seed = 0;
  SolverConfig solver;
  std::string output_dir = ".";
  bool emit_trace = false;
};

struct CliOverrides {
  std::optional<std::string> output_dir;
  std::optional<std::uint64_t> seed;
  std::optional<Backend> backend;
};

/// Parses a run-config JSON document. Throws ConfigError carrying a
/// line-numbered diagnostic for syntax errors and the offending key name for
/// schema errors.
RunConfig parse_run_config(const std::string& path);
RunConfig parse_run_config_text(const std::string& text, const std::string& source_name);

/// Scenario and initial point a config resolves to.
Scenario build_scenario(const RunConfig& config);
ManifoldPoint initial_point(const RunConfig& config, const Scenario& scenario);

/// One solver run as configured (used by both cmd_run and cmd_compare).
RunReport execute_run(const RunConfig& config);

/// Classical-vs-quantum agreement for one config.
struct ComparisonReport {
  std::vector<double> per_iter_gap;
  double max_abs_gap = 0.0;
  std::optional<double> oracle_gap;         ///< relative error vs analytic optimum
  std::optional<double> pilot_offset_gap;   ///< trace-minus-direct constant check
  Index iters_classical = 0;
  Index iters_quantum = 0;
  bool pass = false;
};
ComparisonReport run_comparison(const RunConfig& config);

std::string result_json(const RunConfig& config, const RunReport& report);
std::string comparison_json(const RunConfig& config, const ComparisonReport& report);
std::string trace_csv(const RunReport& report);

/// `run <config>`: writes result.json (and trace.csv when requested).
/// Exit codes: 0 clean, 1 config error, 2 line-search failure.
int cmd_run(const std::string& config_path, const CliOverrides& overrides);

/// `compare <config>`: same problem on both backends, writes compare.json.
/// Exit 0 iff the comparison passes.
int cmd_compare(const std::string& config_path, const CliOverrides& overrides);

struct ValidateOptions {
  bool corrupt_tolerance = false;  ///< test hook: forces every check to fail
};

/// `validate`: built-in invariant suite over the standard size grid; prints a
/// pass/fail table. Exit 0 iff every invariant holds.
int cmd_validate(const ValidateOptions& options, std::ostream& out);

}  // namespace qmopt::harness
