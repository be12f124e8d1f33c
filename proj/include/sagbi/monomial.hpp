#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace sagbi {

using Exponent = std::int32_t;

/// Dense exponent vector over the variables of a ring.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);
  Monomial(std::initializer_list<Exponent> exps) : Monomial(std::vector<Exponent>(exps)) {}

  static Monomial unit(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  std::int64_t totalDegree() const;
  std::int64_t weightedDegree(std::span<const std::int64_t> weights) const;
  bool isOne() const;

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const;
  bool involvesAny(std::span<const std::size_t> vars) const;

  Monomial operator*(const Monomial& o) const;
  Monomial& operator*=(const Monomial& o);
  /// Exact quotient; the caller guarantees divisibility.
  Monomial operator/(const Monomial& o) const;
  Monomial pow(Exponent k) const;

  /// Copy padded with zero exponents up to `nvars`.
  Monomial extended(std::size_t nvars) const;
  /// Sub-vector [begin, end).
  Monomial slice(std::size_t begin, std::size_t end) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// 64-bit support mask, one bit per variable index modulo 64.
  std::uint64_t supportMask() const;

 private:
  std::vector<Exponent> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace sagbi
