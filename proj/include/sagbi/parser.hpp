#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sagbi/monomial_order.hpp"
#include "sagbi/polynomial.hpp"
#include "sagbi/ring.hpp"

namespace sagbi {

/// Parses `+ - * ^`, parentheses, integer and `a/b` literals and the ring's
/// variable names. Errors carry the column of the offending token.
Polynomial parsePolynomial(std::string_view text, const RingPtr& ring);

/// Comma-separated polynomials, splitting only at top-level commas.
std::vector<Polynomial> parsePolynomialList(std::string_view text, const RingPtr& ring);

/// Inverse of MonomialOrder::toString.
MonomialOrder parseOrder(std::string_view text);

/// Identifiers separated by commas or blanks; `x_1..x_3` expands to a range.
std::vector<std::string> parseVariableList(std::string_view text);

}  // namespace sagbi
