#include "sagbi/ring.hpp"

#include <set>

#include "sagbi/error.hpp"

namespace sagbi {

PolyRing::PolyRing(std::vector<std::string> names, MonomialOrder order, RingPtr base,
                   std::vector<Polynomial> ideal, std::vector<Polynomial> basis)
    : names_(std::move(names)),
      order_(std::move(order)),
      comparator_(order_, names_.size()),
      base_(std::move(base)),
      ideal_(std::move(ideal)),
      basis_(std::move(basis)) {}

RingPtr PolyRing::make(std::vector<std::string> names, MonomialOrder order) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) fail(ErrorKind::InvalidInput, "empty variable name");
    if (!seen.insert(n).second) fail(ErrorKind::InvalidInput, "duplicate variable name '" + n + "'");
  }
  return std::make_shared<const PolyRing>(std::move(names), std::move(order), nullptr,
                                          std::vector<Polynomial>{}, std::vector<Polynomial>{});
}

RingPtr PolyRing::makeQuotient(const RingPtr& base, std::vector<Polynomial> ideal, std::vector<Polynomial> reducedBasis) {
  if (base->isQuotient()) fail(ErrorKind::InvalidInput, "quotient of a quotient ring; pass the polynomial ring");
  for (const auto& g : reducedBasis) {
    if (g.ring() != base || !g.isMonic()) fail(ErrorKind::InvalidInput, "quotient basis must be monic and in the base ring");
    if (g.isConstant()) fail(ErrorKind::Domain, "quotient by the unit ideal");
  }
  for (const auto& f : ideal) {
    if (f.ring() != base) fail(ErrorKind::RingMismatch, "quotient ideal generators must be in the base ring");
  }
  return std::make_shared<const PolyRing>(base->names_, base->order_, base, std::move(ideal), std::move(reducedBasis));
}

std::optional<std::size_t> PolyRing::variableIndex(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::vector<Monomial> PolyRing::quotientLeads() const {
  std::vector<Monomial> out;
  out.reserve(basis_.size());
  for (const auto& g : basis_) out.push_back(g.leadMonomial());
  return out;
}

bool PolyRing::equivalent(const PolyRing& other) const {
  if (names_ != other.names_ || !(order_ == other.order_)) return false;
  if (basis_.size() != other.basis_.size()) return false;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].terms() != other.basis_[i].terms()) return false;
  }
  return true;
}

}  // namespace sagbi
