#pragma once

#include <stdexcept>
#include <string>

namespace stconv {

enum class Errc {
  invalid_argument,
  parse_error,
  order_error,
  weil_violation,
  bad_reduction,
  budget_exceeded,
  group_mismatch,
  residual_too_large,
  trivial_present,
  missing_rank,
  empty_series,
  cm_constraint_violation,
};

/// Every failure surfaced by the library carries one of the codes above so the
/// CLI can map it onto a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }
  /// Message without the code name prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

const char* to_string(Errc code) noexcept;

/// 2 input error, 3 budget error, 4 numerical failure.
int exit_code(Errc code) noexcept;

}  // namespace stconv
