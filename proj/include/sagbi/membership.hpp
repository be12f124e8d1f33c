#pragma once

#include <iosfwd>

#include "sagbi/subalgebra.hpp"

namespace sagbi {

/// Result of subringIntersection: `subring` holds the computed generators.
struct IntersectedSubring {
  Subring subring;
  Subring first;
  Subring second;
  bool compositeCertified = false;
};

/// Normal form f % S. Subducts against the cached basis when it is complete,
/// otherwise uses the elimination (extrinsic) method.
Polynomial normalForm(const Polynomial& f, const Subring& s);
Polynomial normalForm(const Polynomial& f, const SagbiBasis& sb);

/// q with f = q(g) + normalForm(f, S), in the presentation ring of S's symbol.
Polynomial quotientCoefficients(const Polynomial& f, const Subring& s);
Polynomial quotientCoefficients(const Polynomial& f, const SagbiBasis& sb);

bool groebnerMembershipTest(const Polynomial& f, const Subring& s);

IntersectedSubring subringIntersection(const Subring& a, const Subring& b, const SagbiOptions& options = {},
                                       std::ostream* trace = nullptr);
inline bool isFullIntersection(const IntersectedSubring& is) { return is.compositeCertified; }

}  // namespace sagbi
