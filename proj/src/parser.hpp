#pragma once

#include <string_view>

#include "polynomial.hpp"

namespace coxhyp {

// Parses a polynomial expression over the ring's variables.
//
// Grammar:
//   expr       := ('+'|'-')? term (('+'|'-') term)*
//   term       := factor ('*' factor)*
//   factor     := atom ('^' posint)?
//   atom       := rational | identifier | '(' expr ')'
//   rational   := integer ('/' posint)?
//   identifier := [A-Za-z][A-Za-z0-9_]*
//
// Whitespace is insignificant, implicit multiplication is not allowed.
// The optional leading sign and the rational literal are the two additions
// needed so that every canonical printout parses back to the same value.
//
// Errors: SyntaxError with a 0-based position, UnknownVariable.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

// True iff `name` matches the identifier grammar above.
bool is_valid_identifier(std::string_view name);

}  // namespace coxhyp
