#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace calab {

enum class Errc {
  invalid_argument,
  not_a_subgroup,
  not_normal,
  memory_mismatch,
  asymptotic_mismatch,
  not_periodic,
  memory_not_in_subgroup,
  budget_exceeded,
  not_bijective,
  not_surjective,
  correction_step_failed,
  inverse_bound_exceeded,
  dimension_bound,
  not_additive,
  no_stabilization,
  implication_violated,
  parse_error,
  schema_error,
  internal,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace calab
