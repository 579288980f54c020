#pragma once

#include "locprog/calculus.hpp"
#include "locprog/economy.hpp"
#include "locprog/vopt.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace locprog::io {

/// A fully validated problem file. Exactly one of problem, economy and map is
/// set, according to kind.
struct ProblemFile {
  enum class Kind { vector_problem, economy, map };

  Kind kind = Kind::vector_problem;
  std::optional<vopt::VectorProblem> problem;
  std::optional<economy::Economy> economy;
  std::optional<calculus::SmoothMap> map;

  Vector x0;                 ///< stacked for economies
  std::vector<double> eps;   ///< radii to run, in file order
  std::optional<double> eps_max;
  std::vector<Vector> weights;

  std::optional<vopt::SolutionCertificate> certificate;
  std::optional<economy::EquilibriumCertificate> equilibrium;
};

const char* kind_name(ProblemFile::Kind kind) noexcept;

/// Parse error with line and column for malformed text; validation error
/// naming the violated invariant for well-formed but inconsistent input.
ProblemFile parse_problem(std::string_view text);

/// Reads the whole file as bytes.
std::string read_file(const std::string& path);

ProblemFile load_problem(const std::string& path);

/// Checks that every radius yields a well-formed localization.
void validate_radii(const ProblemFile& file, const std::vector<double>& eps);

}  // namespace locprog::io
