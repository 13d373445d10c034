#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "darbouxlie/exactmath.hpp"

namespace dlie {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Maps an identifier to its value; nullopt means "unknown identifier".
using Resolver = std::function<std::optional<Poly>(std::string_view)>;

// Recursive-descent parser for polynomial expressions:
//   sum := term (('+'|'-') term)*
//   term := power (('*'|'/'|juxtaposition) power)*
//   power := unary ('^' integer)?
// Division is only allowed by nonzero constants.  Throws ParseError.
Poly parse_poly(std::string_view text, const Resolver& resolve);

// Identifiers x1, x2, ... map to variables 0, 1, ...; `params` supplies named constants.
Poly parse_coordinate_poly(std::string_view text, const std::map<std::string, Rational>& params = {});

// Splits on `sep` at parenthesis depth 0, trimming whitespace; empty pieces are dropped.
std::vector<std::string> split_top(std::string_view text, char sep);
std::string trim(std::string_view s);

}  // namespace dlie
