#pragma once

#include <string>

#include "sagbi/polynomial.hpp"
#include "sagbi/ring.hpp"

namespace sagbi {

/// Text in the expression grammar accepted by parsePolynomial.
std::string formatMonomial(const PolyRing& ring, const Monomial& m);
std::string formatPolynomial(const Polynomial& f);

}  // namespace sagbi
