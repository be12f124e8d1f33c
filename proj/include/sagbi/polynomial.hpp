#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "sagbi/monomial.hpp"
#include "sagbi/rational.hpp"

namespace sagbi {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

struct Term {
  Monomial monomial;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Exact polynomial with terms strictly descending under its ring's order.
///
/// In a quotient ring the stored terms are always the normal form modulo
/// the ring's quotient Groebner basis. Arithmetic requires both operands to
/// live in the same ring object; there is no implicit coercion.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, Rational c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Monomial m, Rational c = 1);
  /// Sorts, merges duplicates, drops zeros and reduces modulo the quotient.
  static Polynomial fromTerms(RingPtr ring, std::vector<Term> terms);
  /// Terms must already be canonical for `ring` (descending, nonzero, reduced).
  static Polynomial fromCanonicalTerms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  bool isMonic() const;

  const Term& leadTerm() const;
  const Monomial& leadMonomial() const { return leadTerm().monomial; }
  const Rational& leadCoefficient() const { return leadTerm().coefficient; }
  Rational constantCoefficient() const;

  /// Largest total degree among the terms; 0 for the zero polynomial.
  std::int64_t totalDegree() const;
  bool involvesAny(std::span<const std::size_t> vars) const;

  Polynomial monic() const;
  Polynomial pow(unsigned k) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  /// `this - c * m * g` in one merge pass.
  Polynomial subtractMultiple(const Rational& c, const Monomial& m, const Polynomial& g) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial polyAdd(const Polynomial& f, const Polynomial& g);
Polynomial polyMul(const Polynomial& f, const Polynomial& g);

/// Substitutes images[i] for variable i of q's ring and expands exactly.
Polynomial evaluateMap(const Polynomial& q, std::span<const Polynomial> images);

/// Moves `f` into `target`, sending variable i to variable varMap[i].
Polynomial mapVariables(const Polynomial& f, const RingPtr& target,
                        std::span<const std::size_t> varMap);

/// Polynomials with no monomial involving the first `blockIndex` order blocks.
std::vector<Polynomial> selectInSubring(std::size_t blockIndex, std::span<const Polynomial> polys);

void requireSameRing(const Polynomial& f, const Polynomial& g);

namespace detail {

/// Full normal form of descending `terms` modulo `basis` (any nonzero leads).
std::vector<Term> reduceTerms(const PolyRing& ring, std::vector<Term> terms,
                              std::span<const Polynomial> basis);

/// Sorts descending and merges equal monomials, dropping zero sums.
void canonicalize(const PolyRing& ring, std::vector<Term>& terms);

}  // namespace detail

}  // namespace sagbi
