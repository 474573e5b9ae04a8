#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gerbeflow/json_io.hpp"

namespace gerbeflow {

inline constexpr const char* kVersion = "gerbeflow 1.0.0";

struct SuiteConfig {
  std::string suite = "schouten";
  int dim = 3;
  int max_deg = 2;
  int mv_deg = 3;
  int trials = 100;
  std::uint64_t seed = 42;
  int order = 4;
  /// Polynomial degree of the spanning family used for cochain equality; -1 disables.
  int span_deg = -1;
  /// Random tuples evaluated per trial by suites that test cochain identities.
  int tuples = 5;
  /// linfty only: use non-closed H and record the defects as expected failures.
  bool negative_control = false;

  /// Throws UsageError on out-of-range fields or an unknown suite.
  void validate() const;
  Json to_json() const;
};

const std::vector<std::string>& suite_names();

struct Failure {
  int trial = 0;
  std::string check;
  bool expected_negative = false;
  Json inputs;
  Json lhs;
  Json rhs;
};

struct Report {
  std::string command;
  Json config;
  int trials = 0;
  long checks = 0;
  /// Checks evaluated per identity name.
  std::map<std::string, long> check_counts;
  /// Equality checks whose sides were nonzero, so the agreement was not vacuous.
  std::map<std::string, long> nonzero_counts;
  std::vector<Failure> failures;
  /// Free-form counters a suite wants surfaced (e.g. obstructed MC trials).
  Json measurements = Json::object();
  double elapsed_ms = 0;

  int exit_code() const { return failures.empty() ? 0 : 1; }
  long expected_negative_count() const;
  /// Failures of the named check that were not expected.
  long unexpected_failures(const std::string& check) const;
  Json to_json(bool with_timing = true) const;
  std::string to_text(bool with_timing = true) const;
};

/// Runs one seeded property suite. Trial t draws from its own generator seeded
/// by (seed, t), so results do not depend on evaluation order.
Report run_suite(const SuiteConfig& config);

enum class McMode { Check, Solve };

struct McJobResult {
  Report report;
  Json output;
  /// 0 solved or zero residual, 3 obstruction.
  int exit_code = 0;
};

/// Check mode evaluates the residual of the problem's "pi" (default h*pi1);
/// solve mode runs the order-by-order solver.
McJobResult mc_job(const Json& problem, McMode mode);

}  // namespace gerbeflow
