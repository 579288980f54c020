#pragma once

#include <stdexcept>
#include <string>

namespace locprog {

/// Base of every error raised by the library. The C API maps each kind to a
/// status code, so the kind is carried explicitly rather than via RTTI.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    domain,
    precondition,
    validation,
    parse,
    solver_stall,
    non_convergence,
    infeasible_result,
    degenerate_multiplier,
    sampling_starvation,
    zero_price,
    degenerate_radius,
    empty_intersection,
    dimension_guard,
  };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

  /// True for errors caused by the input rather than by a numerical failure.
  bool is_input_error() const noexcept {
    return kind_ == Kind::validation || kind_ == Kind::parse;
  }

 private:
  Kind kind_;
};

const char* to_string(Error::Kind kind) noexcept;

[[noreturn]] inline void fail(Error::Kind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace locprog
