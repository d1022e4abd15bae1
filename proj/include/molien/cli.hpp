#pragma once

// Command-line front end: parse a group spec, run the engine, optionally
// cross-check against the oracle, and report as text or JSON.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "molien/lattice.hpp"
#include "molien/molien.hpp"

namespace molien {

enum class OutputFormat { text, json };

struct RunConfig {
  FamilyRequest family;
  int k = 2;
  OutputFormat format = OutputFormat::text;
  bool check_oracle = false;
  std::uint32_t depth = 4;
  Limits limits;
  /// Empty means standard output.
  std::string output_path;
  /// One spec per line; results become a JSON array.
  std::string batch_path;
  bool show_help = false;
};

/// Exit statuses of `run`.
enum ExitStatus : int {
  exit_ok = 0,
  exit_validation = 1,
  exit_capacity = 2,
  exit_inconsistent = 3,
};

/// Parses command-line arguments (without the program name). MOLIEN_CAP in
/// the environment overrides both enumeration caps unless --cap or
/// --oracle-cap is given. Throws ValidationError.
RunConfig parse_spec(const std::vector<std::string>& args);

std::string usage();

struct OracleCheck {
  std::uint32_t depth = 0;
  bool agrees = false;
};

struct RunReport {
  QResult result;
  Rational scaled_limit;
  std::optional<OracleCheck> oracle;
  /// Consistency failures (rank, limit, oracle); non-empty means exit 3.
  std::vector<std::string> failures;

  int exit_status() const { return failures.empty() ? exit_ok : exit_inconsistent; }
};

/// Runs the engine for one config. Throws ValidationError / CapacityError.
RunReport evaluate(const RunConfig& config);

std::string report_text(const RunReport& report);
/// Deterministic JSON (sorted keys, graded-lex term order).
std::string report_json(const RunReport& report, int indent = 2);

/// Reads Q's terms back out of report_json output.
MultiPoly q_from_json(const std::string& json);

/// Full command: evaluates, writes the report, maps errors to exit statuses.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Entry point for the tool: parse + run.
int main_entry(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err);

}  // namespace molien
