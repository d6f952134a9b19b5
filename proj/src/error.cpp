#include "stconv/error.hpp"

namespace stconv {

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
    case Errc::order_error: return "OrderError";
    case Errc::weil_violation: return "WeilViolation";
    case Errc::bad_reduction: return "BadReduction";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::group_mismatch: return "GroupMismatch";
    case Errc::residual_too_large: return "ResidualTooLarge";
    case Errc::trivial_present: return "TrivialPresent";
    case Errc::missing_rank: return "MissingRank";
    case Errc::empty_series: return "EmptySeries";
    case Errc::cm_constraint_violation: return "CMConstraintViolation";
  }
  return "Error";
}

int exit_code(Errc code) noexcept {
  switch (code) {
    case Errc::budget_exceeded: return 3;
    case Errc::residual_too_large: return 4;
    default: return 2;
  }
}

}  // namespace stconv
