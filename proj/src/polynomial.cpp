#include "sagbi/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "sagbi/error.hpp"
#include "sagbi/ring.hpp"

namespace sagbi {

namespace detail {

void canonicalize(const PolyRing& ring, std::vector<Term>& terms) {
  const auto& cmp = ring.comparator();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return cmp.compare(a.monomial, b.monomial) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient.isZero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient.isZero()) out.pop_back();
  terms = std::move(out);
}

namespace {

// a - c * m * b, with a and b descending; m * b stays descending.
std::vector<Term> mergeSubtract(const PolyRing& ring, std::span<const Term> a, const Rational& c,
                                const Monomial* m, std::span<const Term> b) {
  const auto& cmp = ring.comparator();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  auto scaled = [&](std::size_t k) {
    Term t{m ? b[k].monomial * *m : b[k].monomial, -(c * b[k].coefficient)};
    return t;
  };
  while (i < a.size() && j < b.size()) {
    Term tb = scaled(j);
    const auto ord = cmp.compare(a[i].monomial, tb.monomial);
    if (ord > 0) {
      out.push_back(a[i++]);
    } else if (ord < 0) {
      out.push_back(std::move(tb));
      ++j;
    } else {
      Rational s = a[i].coefficient + tb.coefficient;
      if (!s.isZero()) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(scaled(j));
  return out;
}

}  // namespace

std::vector<Term> reduceTerms(const PolyRing& ring, std::vector<Term> terms, std::span<const Polynomial> basis) {
  if (basis.empty() || terms.empty()) return terms;
  struct Reducer {
    const Polynomial* poly;
    std::uint64_t mask;
  };
  std::vector<Reducer> reducers;
  reducers.reserve(basis.size());
  for (const auto& g : basis) {
    if (!g.isZero()) reducers.push_back({&g, g.leadMonomial().supportMask()});
  }
  std::vector<Term> result;
  std::vector<Term> work = std::move(terms);
  std::size_t head = 0;
  while (head < work.size()) {
    const Term& lt = work[head];
    const std::uint64_t mask = lt.monomial.supportMask();
    const Polynomial* divisor = nullptr;
    for (const auto& r : reducers) {
      if ((r.mask & ~mask) != 0) continue;
      if (r.poly->leadMonomial().divides(lt.monomial)) {
        divisor = r.poly;
        break;
      }
    }
    if (!divisor) {
      result.push_back(std::move(work[head]));
      ++head;
      continue;
    }
    const Rational c = lt.coefficient / divisor->leadCoefficient();
    const Monomial m = lt.monomial / divisor->leadMonomial();
    const auto& gt = divisor->terms();
    work = mergeSubtract(ring, std::span<const Term>(work).subspan(head + 1), c, &m,
                         std::span<const Term>(gt).subspan(1));
    head = 0;
  }
  return result;
}

}  // namespace detail

namespace {

std::vector<Term> reduceInRing(const RingPtr& ring, std::vector<Term> terms) {
  if (ring->isQuotient()) return detail::reduceTerms(*ring, std::move(terms), ring->quotientBasis());
  return terms;
}

}  // namespace

void requireSameRing(const Polynomial& f, const Polynomial& g) {
  if (!f.ring() || f.ring() != g.ring()) fail(ErrorKind::RingMismatch, "polynomials live in different rings");
}

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }

Polynomial Polynomial::constant(RingPtr ring, Rational c) {
  if (c.isZero()) return zero(std::move(ring));
  Monomial one(ring->numVars());
  return Polynomial(std::move(ring), {Term{std::move(one), std::move(c)}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->numVars()) fail(ErrorKind::InvalidInput, "variable index out of range");
  Monomial m = Monomial::unit(ring->numVars(), index);
  return monomial(std::move(ring), std::move(m), 1);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Rational c) {
  std::vector<Term> terms;
  terms.push_back({std::move(m), std::move(c)});
  return fromTerms(std::move(ring), std::move(terms));
}

Polynomial Polynomial::fromTerms(RingPtr ring, std::vector<Term> terms) {
  if (!ring) fail(ErrorKind::InvalidInput, "polynomial without a ring");
  for (const auto& t : terms) {
    if (t.monomial.size() != ring->numVars()) {
      fail(ErrorKind::InvalidInput, "exponent vector length does not match the ring");
    }
  }
  detail::canonicalize(*ring, terms);
  terms = reduceInRing(ring, std::move(terms));
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::fromCanonicalTerms(RingPtr ring, std::vector<Term> terms) {
  return Polynomial(std::move(ring), std::move(terms));
}

bool Polynomial::isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.isOne()); }

bool Polynomial::isMonic() const { return !terms_.empty() && terms_[0].coefficient.isOne(); }

const Term& Polynomial::leadTerm() const {
  if (terms_.empty()) fail(ErrorKind::Domain, "lead term of the zero polynomial");
  return terms_.front();
}

Rational Polynomial::constantCoefficient() const {
  if (!terms_.empty() && terms_.back().monomial.isOne()) return terms_.back().coefficient;
  return Rational(0);
}

std::int64_t Polynomial::totalDegree() const {
  std::int64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.totalDegree());
  return d;
}

bool Polynomial::involvesAny(std::span<const std::size_t> vars) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.monomial.involvesAny(vars); });
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_[0].coefficient.isOne()) return *this;
  return *this * terms_[0].coefficient.inverse();
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  requireSameRing(*this, o);
  terms_ = detail::mergeSubtract(*ring_, terms_, Rational(-1), nullptr, o.terms_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  requireSameRing(*this, o);
  terms_ = detail::mergeSubtract(*ring_, terms_, Rational(1), nullptr, o.terms_);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  requireSameRing(a, b);
  if (a.isZero() || b.isZero()) return Polynomial::zero(a.ring_);
  if (a.size() == 1 || b.size() == 1) {
    const Polynomial& single = a.size() == 1 ? a : b;
    const Polynomial& other = a.size() == 1 ? b : a;
    std::vector<Term> terms;
    terms.reserve(other.size());
    const Term& s = single.terms_[0];
    for (const auto& t : other.terms_) terms.push_back({t.monomial * s.monomial, t.coefficient * s.coefficient});
    return Polynomial(a.ring_, reduceInRing(a.ring_, std::move(terms)));
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      auto [it, inserted] = acc.try_emplace(ta.monomial * tb.monomial, ta.coefficient * tb.coefficient);
      if (!inserted) it->second += ta.coefficient * tb.coefficient;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.isZero()) terms.push_back({m, std::move(c)});
  }
  detail::canonicalize(*a.ring_, terms);
  return Polynomial(a.ring_, reduceInRing(a.ring_, std::move(terms)));
}

Polynomial Polynomial::subtractMultiple(const Rational& c, const Monomial& m, const Polynomial& g) const {
  requireSameRing(*this, g);
  if (!ring_->isQuotient()) {
    return Polynomial(ring_, detail::mergeSubtract(*ring_, terms_, c, &m, g.terms_));
  }
  return *this - Polynomial::monomial(ring_, m, c) * g;
}

bool operator==(const Polynomial& a, const Polynomial& b) { return a.ring_ == b.ring_ && a.terms_ == b.terms_; }

Polynomial polyAdd(const Polynomial& f, const Polynomial& g) { return f + g; }

Polynomial polyMul(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial evaluateMap(const Polynomial& q, std::span<const Polynomial> images) {
  if (images.size() != q.ring()->numVars()) {
    fail(ErrorKind::InvalidInput, "number of images does not match the presentation ring");
  }
  if (images.empty()) fail(ErrorKind::InvalidInput, "evaluateMap needs at least one image");
  const RingPtr& target = images[0].ring();
  for (const auto& img : images) requireSameRing(img, images[0]);
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t var, Exponent e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= static_cast<std::size_t>(e)) cache.push_back(cache.back() * images[var]);
    return cache[static_cast<std::size_t>(e)];
  };
  Polynomial result = Polynomial::zero(target);
  for (const auto& t : q.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coefficient);
    for (std::size_t v = 0; v < images.size(); ++v) {
      if (t.monomial[v] != 0) prod *= power(v, t.monomial[v]);
    }
    result += prod;
  }
  return result;
}

Polynomial mapVariables(const Polynomial& f, const RingPtr& target, std::span<const std::size_t> varMap) {
  if (varMap.size() != f.ring()->numVars()) fail(ErrorKind::InvalidInput, "variable map has the wrong arity");
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<Exponent> e(target->numVars(), 0);
    for (std::size_t i = 0; i < varMap.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (varMap[i] >= e.size()) fail(ErrorKind::InvalidInput, "variable map out of range");
      e[varMap[i]] += t.monomial[i];
    }
    terms.push_back({Monomial(std::move(e)), t.coefficient});
  }
  return Polynomial::fromTerms(target, std::move(terms));
}

std::vector<Polynomial> selectInSubring(std::size_t blockIndex, std::span<const Polynomial> polys) {
  if (polys.empty()) return {};
  const auto& blocks = polys[0].ring()->comparator().leadingBlocks();
  if (blockIndex == 0 || blocks.size() < blockIndex) {
    fail(ErrorKind::InvalidInput, "monomial order has fewer than " + std::to_string(blockIndex) + " blocks");
  }
  std::vector<std::size_t> excluded;
  for (std::size_t b = 0; b < blockIndex; ++b) excluded.insert(excluded.end(), blocks[b].begin(), blocks[b].end());
  std::vector<Polynomial> out;
  for (const auto& f : polys) {
    requireSameRing(f, polys[0]);
    if (!f.involvesAny(excluded)) out.push_back(f);
  }
  return out;
}

}  // namespace sagbi
