#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zf/errors.hpp"
#include "zf/mpoly.hpp"

namespace zf {

struct ParseError : InputError {
  ParseError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line, column;
};

/// Parses an infix polynomial expression ("+ - * ^", parentheses, rational
/// literals, division by constants). Variable names are matched
/// case-sensitively against `vars`; `line` and `column0` locate the text
/// inside a larger document for error messages.
MPoly parse_poly(std::string_view text, const std::vector<std::string>& vars, std::size_t line = 1,
                 std::size_t column0 = 1);

/// Convenience: polynomial in t (variable name "t").
UniPoly parse_unipoly(std::string_view text);
/// Form in T, X, Z.
MPoly parse_form(std::string_view text);
/// Polynomial in t, x as a BiPoly.
BiPoly parse_bipoly(std::string_view text);

UniPoly to_unipoly(const MPoly& p);

}  // namespace zf
