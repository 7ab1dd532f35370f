#ifndef DIFFALG_PARSER_HPP
#define DIFFALG_PARSER_HPP

#include <string_view>

#include "diffalg/hyperexp.hpp"
#include "diffalg/ratfunc.hpp"

namespace diffalg {

// Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' exponent)?
//   base   := integer | 'x' | '(' expr ')'
// In rational mode exponents are (signed) integers. Hyperexponential mode
// additionally accepts 'exp' '(' expr ')' with a rational argument and
// parenthesized rational exponents like '^(1/2)' on split rational bases.
//
// Errors: SyntaxError with byte offset; DivisionByZero for literal zero
// denominators; NotInvertible when dividing by a multi-term element.

RatFunc parse_ratfunc(std::string_view text);
TowerElem parse_tower_elem(std::string_view text);
// Single-term restriction of parse_tower_elem.
HyperexpElem parse_hyperexp(std::string_view text);

} // namespace diffalg

#endif
