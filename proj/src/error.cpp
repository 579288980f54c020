#include "locprog/error.hpp"

namespace locprog {

const char* to_string(Error::Kind kind) noexcept {
  switch (kind) {
    case Error::Kind::domain:
      return "domain";
    case Error::Kind::precondition:
      return "precondition";
    case Error::Kind::validation:
      return "validation";
    case Error::Kind::parse:
      return "parse";
    case Error::Kind::solver_stall:
      return "solver_stall";
    case Error::Kind::non_convergence:
      return "non_convergence";
    case Error::Kind::infeasible_result:
      return "infeasible_result";
    case Error::Kind::degenerate_multiplier:
      return "degenerate_multiplier";
    case Error::Kind::sampling_starvation:
      return "sampling_starvation";
    case Error::Kind::zero_price:
      return "zero_price";
    case Error::Kind::degenerate_radius:
      return "degenerate_radius";
    case Error::Kind::empty_intersection:
      return "empty_intersection";
    case Error::Kind::dimension_guard:
      return "dimension_guard";
  }
  return "unknown";
}

}  // namespace locprog
