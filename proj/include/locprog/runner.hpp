#pragma once

#include "locprog/problem_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace locprog::cli {

enum class Command {
  check_regularity,
  economy_regularity,
  convexity_radius,
  localize,
  pareto_sweep,
  certify,
  economy_solve,
  economy_verify,
};

std::optional<Command> parse_command(std::string_view name);
const char* command_name(Command command) noexcept;
const std::vector<Command>& all_commands();

struct Tolerances {
  double feasibility = 1e-8;
  double optimality = 1e-6;
  double boundary_rel = 1e-5;
};

struct SampleCounts {
  int convexity_pairs = 2000;
  int certificate_samples = 10000;
  int budget_samples = 10000;
};

struct RunConfig {
  std::uint64_t seed = 0;
  Tolerances tolerances;
  SampleCounts samples;
  std::string output_path;
  /// Replaces the radii listed in the input file when nonempty.
  std::vector<double> eps;
  /// Simplex weight grid with this many steps per edge; 0 uses the file's weights.
  int weights_grid = 0;
  int multi_starts = 4;
  /// Worker threads. Results do not depend on it and reports do not record it.
  int threads = 1;

  /// Validation error for nonpositive tolerances or sample counts.
  void validate() const;
};

enum class Status { pass, fail, error, input_error };

struct Report {
  std::string command;
  std::string inputs_digest;
  Status status = Status::pass;
  std::string json;   ///< the full report document
  std::string table;  ///< tab-separated rows for sweep commands, else empty

  /// 0 pass, 1 check failure or module error, 2 input error.
  int exit_code() const noexcept;
};

/// Reads, validates and runs. Never throws for problems with the input or
/// the computation; those end up in the report.
Report run(Command command, const std::string& input_path, const RunConfig& config);

/// Same on text already in memory; the digest covers exactly `text`.
Report run_text(Command command, std::string_view text, const RunConfig& config);

/// "sha256:" followed by the lowercase hex digest.
std::string content_digest(std::string_view bytes);

/// Writes through a temporary file in the same directory and renames it.
void write_atomically(const std::string& path, std::string_view content);

/// Report JSON at `path`, and the table at `path`.tsv when there is one.
void write_report(const Report& report, const std::string& path);

}  // namespace locprog::cli
