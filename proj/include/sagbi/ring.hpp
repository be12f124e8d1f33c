#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sagbi/monomial_order.hpp"
#include "sagbi/polynomial.hpp"

namespace sagbi {

/// Polynomial ring over the rationals, optionally a quotient R/I.
///
/// Rings are immutable and shared by pointer; two polynomials are
/// compatible only when they reference the same ring object.
class PolyRing {
 public:
  static RingPtr make(std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex());

  /// Quotient of `base` by the ideal generated by `ideal`. `reducedBasis`
  /// must be the complete, reduced, monic Groebner basis of that ideal in
  /// `base`. Use `quotientRing()` from groebner.hpp to compute it.
  static RingPtr makeQuotient(const RingPtr& base, std::vector<Polynomial> ideal,
                              std::vector<Polynomial> reducedBasis);

  std::size_t numVars() const { return names_.size(); }
  const std::vector<std::string>& variableNames() const { return names_; }
  const std::string& variableName(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> variableIndex(std::string_view name) const;

  const MonomialOrder& order() const { return order_; }
  const OrderComparator& comparator() const { return comparator_; }
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return comparator_.compare(a, b);
  }

  bool isQuotient() const { return base_ != nullptr; }
  /// The underlying polynomial ring (nullptr when this ring is not a quotient).
  const RingPtr& base() const { return base_; }
  const std::vector<Polynomial>& quotientIdeal() const { return ideal_; }
  const std::vector<Polynomial>& quotientBasis() const { return basis_; }
  /// Monic lead monomials of the quotient basis, i.e. generators of in(I).
  std::vector<Monomial> quotientLeads() const;

  /// Same variables, order and quotient basis.
  bool equivalent(const PolyRing& other) const;

  PolyRing(std::vector<std::string> names, MonomialOrder order, RingPtr base,
           std::vector<Polynomial> ideal, std::vector<Polynomial> basis);

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
  OrderComparator comparator_;
  RingPtr base_;
  std::vector<Polynomial> ideal_;
  std::vector<Polynomial> basis_;
};

}  // namespace sagbi
