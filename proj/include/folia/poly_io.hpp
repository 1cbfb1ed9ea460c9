#pragma once

#include "folia/multipoly.hpp"
#include "folia/unipoly.hpp"

#include <string>
#include <string_view>

namespace folia {

// Grammar, whitespace insignificant:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff ('*'? factor)* | factor ('*'? factor)*
//   factor := var ('^' nat)?
//   var    := 'z' nat            (1 <= nat <= num_vars)
//   coeff  := int ('/' nat)?
// Throws ParseError carrying the byte offset of the failure.
MultiPoly parse_poly(std::string_view text, std::size_t num_vars);

// Canonical text form; parse_poly(to_string(p), n) == p.
std::string to_string(const MultiPoly& p);

// Univariate form printed in the variable `name`, e.g. "2*z3^2 - 1".
std::string to_string(const UniPoly& p, std::string_view name = "x");

}  // namespace folia
