#ifndef ORBIZETA_PARSER_HPP
#define ORBIZETA_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orbizeta/polynomial.hpp"

namespace orbizeta {

/// Syntax error in a polynomial expression; position() is the 0-based
/// offset of the offending character.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses expressions such as "x*y - z^3" or "-(x + 2)^2*y".
///
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' integer)?
///   atom   := integer | letter | '(' expr ')'
///
/// Variables are the single letters a-z occurring in the text, in
/// alphabetical order.  Whitespace is ignored.  Implicit multiplication
/// ("2x", "xy") is rejected.
IntPolynomial parse_polynomial(std::string_view text);

/// As above, rebased onto `variables`; every letter used must be listed.
IntPolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

}  // namespace orbizeta

#endif
