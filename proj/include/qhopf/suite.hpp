#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qhopf/check.hpp"
#include "qhopf/repr.hpp"

namespace qhopf {

inline const std::vector<std::string> kSuiteNames = {"scalar", "algebra", "hopf",
                                                     "rmatrix", "cybe", "cg"};

enum class ReportFormat { Json, Csv };

struct SuiteConfig {
  std::vector<double> q_values{0.5, 0.8};
  int n_max = 3;
  // Entries over {+,-}. A check is kept when it has no colours or its colour
  // string starts with one of the entries. Empty keeps everything.
  std::vector<std::string> colour_filter;
  double tol = 1e-9;
  std::vector<std::string> suites = kSuiteNames;
  std::string out_path;  // empty: stdout
  ReportFormat format = ReportFormat::Json;
  bool dump_matrices = false;
  // Added to J0(0,0) of every irrep the runner builds; 0 disables.
  double perturb = 0.0;
  unsigned jobs = 0;  // 0: hardware concurrency

  friend bool operator==(const SuiteConfig&, const SuiteConfig&) = default;
};

/// Throws ConfigError.
void validate(const SuiteConfig& cfg);

using RepFactory = std::function<GeneratorRep(const RepLabel&, const QParams&)>;

/// make_rep, with cfg.perturb added to J0(0,0).
RepFactory rep_factory(const SuiteConfig& cfg);

/// Runs the selected suites. The result is sorted by (suite, q, ns, colours,
/// name, tag) independently of scheduling. A check that throws is reported as
/// failed with its message and a NaN residual.
std::vector<CheckReport> run_suites(const SuiteConfig& cfg);

struct ReportSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  double max_residual = 0.0;
};
ReportSummary summarize(const std::vector<CheckReport>& reports);

/// {version, config, checks, summary}; keys sorted. `canonical` drops
/// elapsedMicros. Throws EmptyReport on an empty list.
std::string emit_json(const std::vector<CheckReport>& reports, const SuiteConfig& cfg,
                      bool canonical = false);
std::string emit_csv(const std::vector<CheckReport>& reports);

struct ParsedReport {
  SuiteConfig config;
  std::vector<CheckReport> checks;
};
ParsedReport parse_json(const std::string& text);

/// Serializes in cfg.format to cfg.out_path (or stdout). Throws IoError.
void emit_report(const std::vector<CheckReport>& reports, const SuiteConfig& cfg,
                 bool canonical = false);

/// Irrep images and R-matrices on the configured grid, as a JSON array.
std::string dump_matrices_json(const SuiteConfig& cfg);

std::string colour_string(const std::vector<int>& colours);

}  // namespace qhopf
