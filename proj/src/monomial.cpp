#include "sagbi/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "sagbi/error.hpp"

namespace sagbi {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_) {
    if (e < 0) fail(ErrorKind::InvalidInput, "negative exponent in monomial");
  }
}

Monomial Monomial::unit(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  return m;
}

std::int64_t Monomial::totalDegree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::int64_t{0});
}

std::int64_t Monomial::weightedDegree(std::span<const std::int64_t> weights) const {
  std::int64_t d = 0;
  const std::size_t n = std::min(weights.size(), exps_.size());
  for (std::size_t i = 0; i < n; ++i) d += weights[i] * exps_[i];
  return d;
}

bool Monomial::isOne() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  const std::size_t n = exps_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::involvesAny(std::span<const std::size_t> vars) const {
  return std::any_of(vars.begin(), vars.end(), [&](std::size_t v) { return exps_[v] != 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  r *= o;
  return r;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  const std::size_t n = exps_.size();
  for (std::size_t i = 0; i < n; ++i) exps_[i] += o.exps_[i];
  return *this;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r = *this;
  const std::size_t n = exps_.size();
  for (std::size_t i = 0; i < n; ++i) r.exps_[i] -= o.exps_[i];
  return r;
}

Monomial Monomial::pow(Exponent k) const {
  Monomial r = *this;
  for (Exponent& e : r.exps_) e *= k;
  return r;
}

Monomial Monomial::extended(std::size_t nvars) const {
  Monomial r = *this;
  r.exps_.resize(nvars, 0);
  return r;
}

Monomial Monomial::slice(std::size_t begin, std::size_t end) const {
  return Monomial(std::vector<Exponent>(exps_.begin() + static_cast<std::ptrdiff_t>(begin),
                                        exps_.begin() + static_cast<std::ptrdiff_t>(end)));
}

std::uint64_t Monomial::supportMask() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) mask |= std::uint64_t{1} << (i % 64);
  }
  return mask;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Exponent e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace sagbi
