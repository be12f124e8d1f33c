#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sagbi/monomial.hpp"

namespace sagbi {

/// Declarative description of a global monomial order.
///
/// Variables compare with x_1 > x_2 > ... > x_n.  Weights and Eliminate
/// compare a weighted degree first and fall back to the tie-break order;
/// Blocks compares block by block, each block under its own order.
class MonomialOrder {
 public:
  struct Lex {
    friend bool operator==(const Lex&, const Lex&) = default;
  };
  struct GRevLex {
    friend bool operator==(const GRevLex&, const GRevLex&) = default;
  };
  struct Weights {
    std::vector<std::int64_t> weights;
    std::shared_ptr<const MonomialOrder> tieBreak;
  };
  struct Eliminate {
    std::size_t count = 0;
    std::shared_ptr<const MonomialOrder> tieBreak;
  };
  struct Blocks {
    std::vector<std::pair<std::size_t, std::shared_ptr<const MonomialOrder>>> blocks;
  };
  using Variant = std::variant<Lex, GRevLex, Weights, Eliminate, Blocks>;

  MonomialOrder() : v_(GRevLex{}) {}

  static MonomialOrder lex() { return MonomialOrder(Lex{}); }
  static MonomialOrder grevlex() { return MonomialOrder(GRevLex{}); }
  static MonomialOrder weights(std::vector<std::int64_t> w,
                               MonomialOrder tieBreak = grevlex());
  static MonomialOrder eliminate(std::size_t count, MonomialOrder tieBreak = grevlex());
  static MonomialOrder blocks(std::vector<std::pair<std::size_t, MonomialOrder>> blocks);

  const Variant& variant() const { return v_; }

  /// Renders in the script `orderspec` grammar.
  std::string toString() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b);

 private:
  explicit MonomialOrder(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// MonomialOrder compiled against a fixed variable count.
class OrderComparator {
 public:
  OrderComparator(const MonomialOrder& order, std::size_t nvars);

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::size_t numVars() const { return nvars_; }

  /// Variable sets of the leading elimination/weight/product blocks, in order.
  const std::vector<std::vector<std::size_t>>& leadingBlocks() const { return blocks_; }

 private:
  struct Step {
    enum class Kind { Weight, Degree, Lex, RevLex } kind;
    std::size_t begin;
    std::size_t end;
    std::vector<std::int64_t> weights;
  };

  void compile(const MonomialOrder& order, std::size_t begin, std::size_t end);
  void collectBlocks(const MonomialOrder& order, std::size_t begin, std::size_t end,
                     std::vector<std::vector<std::size_t>>& out) const;

  std::size_t nvars_;
  std::vector<Step> steps_;
  std::vector<std::vector<std::size_t>> blocks_;
};

/// Three-way comparison of exponent vectors; throws on length mismatch.
std::strong_ordering compareMonomials(const MonomialOrder& order, const Monomial& a,
                                      const Monomial& b);

}  // namespace sagbi
