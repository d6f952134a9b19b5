#pragma once

#include <string_view>

#include "stconv/class_function.hpp"
#include "stconv/stgroup.hpp"

namespace stconv {

/// Parses a character expression on `group` into an exact class function.
///
///   expr  := term (('+' | '-') term)*
///   term  := unary ('*' unary)*
///   unary := ('+' | '-') unary | power
///   power := atom ('^' integer)?
///   atom  := integer | name | '(' expr ')'
///
/// Names: a1, a2, s<n> (power sum of the standard representation), and the
/// irreducible labels chi_<n>, chi_{m,n}, chi_<i>xchi_<j>, nu_<m>, nu_{-m},
/// rho_<m>, triv, sign. Integers are constant class functions.
/// Throws ParseError with the offending position.
ClassFunction parse_character(std::string_view text, Group group);

}  // namespace stconv
