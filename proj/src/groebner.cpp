#include "sagbi/groebner.hpp"

#include <algorithm>
#include <limits>

#include "sagbi/error.hpp"

namespace sagbi {

namespace {

constexpr std::int64_t kAllDegrees = std::numeric_limits<std::int64_t>::max();

std::vector<Term> extendTerms(const std::vector<Term>& terms, std::size_t nvars) {
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back({t.monomial.extended(nvars), t.coefficient});
  return out;
}

}  // namespace

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g) {
  requireSameRing(f, g);
  if (f.isZero() || g.isZero()) fail(ErrorKind::Domain, "S-polynomial of a zero polynomial");
  const Monomial l = lcm(f.leadMonomial(), g.leadMonomial());
  const Polynomial left = Polynomial::monomial(f.ring(), l / f.leadMonomial(), f.leadCoefficient().inverse()) * f;
  return left.subtractMultiple(g.leadCoefficient().inverse(), l / g.leadMonomial(), g);
}

Polynomial reduceModulo(const Polynomial& f, std::span<const Polynomial> basis) {
  std::vector<Polynomial> all;
  for (const auto& g : basis) {
    requireSameRing(f, g);
    if (!g.isZero()) all.push_back(g);
  }
  const auto& ring = f.ring();
  if (ring->isQuotient()) {
    all.insert(all.end(), ring->quotientBasis().begin(), ring->quotientBasis().end());
  }
  if (all.empty()) return f;
  return Polynomial::fromCanonicalTerms(ring, detail::reduceTerms(*ring, f.terms(), all));
}

// ---------------------------------------------------------------------------
// GroebnerEngine

GroebnerEngine::GroebnerEngine(RingPtr ring, std::vector<std::int64_t> grading)
    : ring_(std::move(ring)), grading_(std::move(grading)) {
  if (ring_->isQuotient()) fail(ErrorKind::InvalidInput, "GroebnerEngine works over a polynomial ring");
  if (grading_.empty()) grading_.assign(ring_->numVars(), 1);
  if (grading_.size() != ring_->numVars()) fail(ErrorKind::InvalidInput, "grading has the wrong length");
  for (auto w : grading_) {
    if (w <= 0) fail(ErrorKind::InvalidInput, "grading weights must be positive");
  }
}

void GroebnerEngine::addGenerator(const Polynomial& f) {
  if (f.ring() != ring_) fail(ErrorKind::RingMismatch, "generator is not in the engine ring");
  if (f.isZero()) return;
  std::int64_t d = 0;
  for (const auto& t : f.terms()) d = std::max(d, degree(t.monomial));
  inputs_.push_back({f, d});
  if (computedThrough_ && *computedThrough_ >= d) computedThrough_ = d - 1;
}

std::optional<std::int64_t> GroebnerEngine::minPendingDegree() const {
  std::optional<std::int64_t> best;
  for (const auto& in : inputs_) {
    if (!best || in.degree < *best) best = in.degree;
  }
  if (!pairs_.empty()) {
    const std::int64_t d = pairs_.front().degree;  // heap top
    if (!best || d < *best) best = d;
  }
  return best;
}

bool GroebnerEngine::pairBefore(const Pair& a, const Pair& b) const {
  if (a.degree != b.degree) return a.degree < b.degree;
  const auto c = ring_->compare(a.lcm, b.lcm);
  if (c != 0) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

std::vector<Term> GroebnerEngine::normalForm(std::vector<Term> terms, bool tailToo) const {
  std::vector<Term> result;
  std::vector<Term> work = std::move(terms);
  const auto& cmp = ring_->comparator();
  while (!work.empty()) {
    const Monomial& lm = work.front().monomial;
    const std::uint64_t mask = lm.supportMask();
    const Element* divisor = nullptr;
    for (const auto& e : basis_) {
      if (!e.live || (e.mask & ~mask) != 0) continue;
      if (e.poly.leadMonomial().divides(lm)) {
        divisor = &e;
        break;
      }
    }
    if (!divisor) {
      if (!tailToo) {
        result.insert(result.end(), std::make_move_iterator(work.begin()), std::make_move_iterator(work.end()));
        return result;
      }
      result.push_back(std::move(work.front()));
      work.erase(work.begin());
      // Move the irreducible prefix in one go.
      continue;
    }
    const Rational c = work.front().coefficient;  // divisor is monic
    const Monomial m = lm / divisor->poly.leadMonomial();
    const auto& gt = divisor->poly.terms();
    std::vector<Term> merged;
    merged.reserve(work.size() + gt.size());
    std::size_t i = 1;
    std::size_t j = 1;
    while (i < work.size() && j < gt.size()) {
      Monomial mb = gt[j].monomial * m;
      const auto ord = cmp.compare(work[i].monomial, mb);
      if (ord > 0) {
        merged.push_back(std::move(work[i++]));
      } else if (ord < 0) {
        merged.push_back({std::move(mb), -(c * gt[j].coefficient)});
        ++j;
      } else {
        Rational s = work[i].coefficient - c * gt[j].coefficient;
        if (!s.isZero()) merged.push_back({std::move(work[i].monomial), std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < work.size(); ++i) merged.push_back(std::move(work[i]));
    for (; j < gt.size(); ++j) merged.push_back({gt[j].monomial * m, -(c * gt[j].coefficient)});
    work = std::move(merged);
  }
  return result;
}

Polynomial GroebnerEngine::reduce(const Polynomial& f) const {
  if (f.ring() != ring_) fail(ErrorKind::RingMismatch, "polynomial is not in the engine ring");
  return Polynomial::fromCanonicalTerms(ring_, normalForm(f.terms(), true));
}

void GroebnerEngine::insert(Polynomial h) {
  h = h.monic();
  const Monomial lh = h.leadMonomial();
  const std::size_t hi = basis_.size();
  const std::int64_t hdeg = degree(lh);

  // Gebauer-Moeller: new pairs (g, h).
  std::vector<Pair> candidates;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (!basis_[k].live) continue;
    Monomial l = lcm(basis_[k].poly.leadMonomial(), lh);
    const std::int64_t d = degree(l);
    candidates.push_back({k, hi, std::move(l), d});
  }
  std::vector<bool> coprimeFlag(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    coprimeFlag[c] = coprime(basis_[candidates[c].i].poly.leadMonomial(), lh);
  }
  std::vector<std::size_t> kept;
  std::vector<bool> removed(candidates.size(), false);
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    bool keep = coprimeFlag[c];
    if (!keep) {
      keep = true;
      for (std::size_t o = c + 1; o < candidates.size() && keep; ++o) {
        if (candidates[o].lcm.divides(candidates[c].lcm)) keep = false;
      }
      for (std::size_t o : kept) {
        if (!keep) break;
        if (candidates[o].lcm.divides(candidates[c].lcm)) keep = false;
      }
    }
    if (keep) kept.push_back(c);
    else removed[c] = true;
  }

  // Chain criterion on the old pairs.
  std::vector<Pair> survivors;
  survivors.reserve(pairs_.size());
  for (auto& p : pairs_) {
    const Monomial& li = basis_[p.i].poly.leadMonomial();
    const Monomial& lj = basis_[p.j].poly.leadMonomial();
    if (lh.divides(p.lcm) && lcm(li, lh) != p.lcm && lcm(lj, lh) != p.lcm) continue;
    survivors.push_back(std::move(p));
  }
  pairs_ = std::move(survivors);
  for (std::size_t c : kept) {
    if (!coprimeFlag[c]) pairs_.push_back(std::move(candidates[c]));
  }
  std::make_heap(pairs_.begin(), pairs_.end(), [this](const Pair& a, const Pair& b) { return pairBefore(b, a); });

  for (auto& e : basis_) {
    if (e.live && lh.divides(e.poly.leadMonomial())) e.live = false;
  }
  basis_.push_back({std::move(h), lh.supportMask(), hdeg, true});
}

void GroebnerEngine::computeTo(std::optional<std::int64_t> bound) {
  const auto heapCmp = [this](const Pair& a, const Pair& b) { return pairBefore(b, a); };
  while (true) {
    std::optional<std::size_t> inputIdx;
    for (std::size_t k = 0; k < inputs_.size(); ++k) {
      if (!inputIdx || inputs_[k].degree < inputs_[*inputIdx].degree) inputIdx = k;
    }
    const bool havePair = !pairs_.empty();
    if (!inputIdx && !havePair) {
      computedThrough_ = kAllDegrees;
      return;
    }
    const std::int64_t inDeg = inputIdx ? inputs_[*inputIdx].degree : kAllDegrees;
    const std::int64_t pairDeg = havePair ? pairs_.front().degree : kAllDegrees;
    const std::int64_t next = std::min(inDeg, pairDeg);
    if (bound && next > *bound) {
      if (!computedThrough_ || *computedThrough_ < *bound) computedThrough_ = *bound;
      return;
    }
    if (inDeg <= pairDeg) {
      Polynomial f = std::move(inputs_[*inputIdx].poly);
      inputs_.erase(inputs_.begin() + static_cast<std::ptrdiff_t>(*inputIdx));
      auto nf = normalForm(f.terms(), true);
      if (!nf.empty()) insert(Polynomial::fromCanonicalTerms(ring_, std::move(nf)));
      continue;
    }
    std::pop_heap(pairs_.begin(), pairs_.end(), heapCmp);
    Pair p = std::move(pairs_.back());
    pairs_.pop_back();
    const Polynomial& fi = basis_[p.i].poly;
    const Polynomial& fj = basis_[p.j].poly;
    Polynomial s = Polynomial::monomial(ring_, p.lcm / fi.leadMonomial(), 1) * fi;
    s = s.subtractMultiple(Rational(1), p.lcm / fj.leadMonomial(), fj);
    ++pairsReduced_;
    auto nf = normalForm(s.terms(), true);
    if (!nf.empty()) insert(Polynomial::fromCanonicalTerms(ring_, std::move(nf)));
  }
}

std::vector<Polynomial> GroebnerEngine::reducedBasis(std::optional<std::int64_t> maxDegree,
                                                     const std::function<bool(const Monomial&)>& leadFilter) const {
  std::vector<Polynomial> out;
  for (const auto& e : basis_) {
    if (!e.live) continue;
    if (maxDegree && e.degree > *maxDegree) continue;
    if (leadFilter && !leadFilter(e.poly.leadMonomial())) continue;
    const auto& terms = e.poly.terms();
    std::vector<Term> tail(terms.begin() + 1, terms.end());
    std::vector<Term> reduced;
    reduced.reserve(terms.size());
    reduced.push_back(terms.front());
    auto nf = normalForm(std::move(tail), true);
    reduced.insert(reduced.end(), std::make_move_iterator(nf.begin()), std::make_move_iterator(nf.end()));
    out.push_back(Polynomial::fromCanonicalTerms(ring_, std::move(reduced)));
  }
  std::sort(out.begin(), out.end(), [this](const Polynomial& a, const Polynomial& b) {
    return ring_->compare(a.leadMonomial(), b.leadMonomial()) < 0;
  });
  return out;
}

std::size_t GroebnerEngine::liveCount() const {
  return static_cast<std::size_t>(std::count_if(basis_.begin(), basis_.end(), [](const Element& e) { return e.live; }));
}

void GroebnerEngine::rebase(RingPtr ring, std::vector<std::int64_t> grading) {
  if (ring->numVars() < ring_->numVars()) fail(ErrorKind::InvalidInput, "rebase must not drop variables");
  if (grading.size() != ring->numVars()) fail(ErrorKind::InvalidInput, "grading has the wrong length");
  const std::size_t n = ring->numVars();
  for (auto& e : basis_) e.poly = Polynomial::fromCanonicalTerms(ring, extendTerms(e.poly.terms(), n));
  for (auto& p : pairs_) p.lcm = p.lcm.extended(n);
  for (auto& in : inputs_) in.poly = Polynomial::fromCanonicalTerms(ring, extendTerms(in.poly.terms(), n));
  ring_ = std::move(ring);
  grading_ = std::move(grading);
}

// ---------------------------------------------------------------------------

GroebnerBasis buchberger(std::span<const Polynomial> gens, std::optional<std::int64_t> degreeBound) {
  if (gens.empty()) fail(ErrorKind::InvalidInput, "buchberger needs a ring; use the ring overload for empty input");
  return buchberger(gens[0].ring(), gens, degreeBound);
}

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens, std::optional<std::int64_t> degreeBound) {
  const RingPtr work = ring->isQuotient() ? ring->base() : ring;
  GroebnerEngine engine(work);
  for (const auto& g : gens) {
    if (g.ring() != ring) fail(ErrorKind::RingMismatch, "generators must share the ring");
    engine.addGenerator(Polynomial::fromCanonicalTerms(work, g.terms()));
  }
  if (ring->isQuotient()) {
    for (const auto& q : ring->quotientBasis()) engine.addGenerator(q);
  }
  engine.computeTo(degreeBound);
  GroebnerBasis gb;
  gb.ring = ring;
  gb.degreeBound = degreeBound;
  gb.complete = engine.complete();
  const auto leadsOfI = ring->quotientLeads();
  for (auto& g : engine.reducedBasis()) {
    if (ring->isQuotient()) {
      const bool inI = std::any_of(leadsOfI.begin(), leadsOfI.end(),
                                   [&](const Monomial& m) { return m.divides(g.leadMonomial()); });
      if (inI) continue;
      gb.generators.push_back(Polynomial::fromCanonicalTerms(ring, g.terms()));
    } else {
      gb.generators.push_back(std::move(g));
    }
  }
  return gb;
}

std::vector<Term> initialIdealGens(const GroebnerBasis& gb) {
  if (!gb.complete) fail(ErrorKind::Incomplete, "initial ideal of an incomplete Groebner basis");
  std::vector<Term> out;
  for (const auto& g : gb.generators) out.push_back({g.leadMonomial(), Rational(1)});
  return out;
}

std::vector<Polynomial> eliminationSubring(const GroebnerBasis& gb, std::size_t blockIndex) {
  if (!gb.complete) fail(ErrorKind::Incomplete, "elimination from an incomplete Groebner basis");
  return selectInSubring(blockIndex, gb.generators);
}

RingPtr quotientRing(const RingPtr& base, std::vector<Polynomial> ideal) {
  if (base->isQuotient()) fail(ErrorKind::InvalidInput, "quotientRing expects a polynomial ring");
  GroebnerBasis gb = buchberger(base, ideal);
  for (const auto& g : gb.generators) {
    if (g.isConstant()) fail(ErrorKind::Domain, "quotient by the unit ideal");
  }
  return PolyRing::makeQuotient(base, std::move(ideal), std::move(gb.generators));
}

// ---------------------------------------------------------------------------
// TagIdeal

MonomialOrder presentationOrder(const std::vector<std::int64_t>& degrees) {
  return MonomialOrder::weights(degrees, MonomialOrder::grevlex());
}

RingPtr makePresentationRing(const std::string& symbol, const std::vector<std::int64_t>& degrees) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < degrees.size(); ++i) names.push_back(symbol + "_" + std::to_string(i + 1));
  return PolyRing::make(std::move(names), presentationOrder(degrees));
}

namespace {

RingPtr makeTagRing(const RingPtr& ambient, const std::string& symbol, const std::vector<std::int64_t>& degrees) {
  const std::size_t n = ambient->numVars();
  std::vector<std::string> names = ambient->variableNames();
  for (std::size_t i = 0; i < degrees.size(); ++i) names.push_back("$" + symbol + "_" + std::to_string(i + 1));
  std::vector<std::pair<std::size_t, MonomialOrder>> blocks;
  blocks.emplace_back(n, ambient->order());
  if (!degrees.empty()) blocks.emplace_back(degrees.size(), presentationOrder(degrees));
  return PolyRing::make(std::move(names), MonomialOrder::eliminate(n, MonomialOrder::blocks(std::move(blocks))));
}

std::vector<std::int64_t> tagGrading(std::size_t n, const std::vector<std::int64_t>& degrees) {
  std::vector<std::int64_t> g(n, 1);
  g.insert(g.end(), degrees.begin(), degrees.end());
  return g;
}

}  // namespace

TagIdeal::TagIdeal(RingPtr ambient, std::vector<Monomial> leads, std::string symbol,
                   std::optional<std::vector<Monomial>> initialIdeal)
    : ambient_(std::move(ambient)),
      symbol_(std::move(symbol)),
      leads_(std::move(leads)),
      initialIdeal_(initialIdeal ? std::move(*initialIdeal) : ambient_->quotientLeads()),
      engine_([&] {
        for (const auto& m : leads_) {
          if (m.size() != ambient_->numVars()) fail(ErrorKind::InvalidInput, "lead monomial has the wrong length");
          if (m.isOne()) fail(ErrorKind::InvalidInput, "constant lead monomial in the reduction ideal");
          leadDegrees_.push_back(m.totalDegree());
        }
        return GroebnerEngine(makeTagRing(ambient_, symbol_, leadDegrees_),
                              tagGrading(ambient_->numVars(), leadDegrees_));
      }()) {
  presentation_ = makePresentationRing(symbol_, leadDegrees_);
  for (std::size_t i = 0; i < leads_.size(); ++i) engine_.addGenerator(tagPolynomial(i));
  const std::size_t total = engine_.ring()->numVars();
  for (const auto& m : initialIdeal_) engine_.addGenerator(Polynomial::monomial(engine_.ring(), m.extended(total)));
}

Polynomial TagIdeal::tagPolynomial(std::size_t index) const {
  const std::size_t n = ambient_->numVars();
  const std::size_t total = engine_.ring()->numVars();
  std::vector<Term> terms;
  terms.push_back({leads_[index].extended(total), Rational(1)});
  terms.push_back({Monomial::unit(total, n + index), Rational(-1)});
  return Polynomial::fromTerms(engine_.ring(), std::move(terms));
}

void TagIdeal::addLeads(std::span<const Monomial> leads) {
  if (leads.empty()) return;
  const std::size_t first = leads_.size();
  for (const auto& m : leads) {
    if (m.size() != ambient_->numVars()) fail(ErrorKind::InvalidInput, "lead monomial has the wrong length");
    if (m.isOne()) fail(ErrorKind::InvalidInput, "constant lead monomial in the reduction ideal");
    leads_.push_back(m);
    leadDegrees_.push_back(m.totalDegree());
  }
  engine_.rebase(makeTagRing(ambient_, symbol_, leadDegrees_), tagGrading(ambient_->numVars(), leadDegrees_));
  presentation_ = makePresentationRing(symbol_, leadDegrees_);
  for (std::size_t i = first; i < leads_.size(); ++i) engine_.addGenerator(tagPolynomial(i));
}

std::optional<std::vector<Exponent>> TagIdeal::factor(const Monomial& m) {
  const std::size_t n = ambient_->numVars();
  if (m.size() != n) fail(ErrorKind::InvalidInput, "monomial has the wrong length");
  engine_.computeTo(m.totalDegree());
  const Polynomial nf = engine_.reduce(Polynomial::monomial(engine_.ring(), m.extended(engine_.ring()->numVars())));
  if (nf.size() != 1) return std::nullopt;
  const Monomial& r = nf.leadMonomial();
  for (std::size_t i = 0; i < n; ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  const auto e = r.exponents();
  return std::vector<Exponent>(e.begin() + static_cast<std::ptrdiff_t>(n), e.end());
}

std::vector<Polynomial> TagIdeal::kernel(std::optional<std::int64_t> maxDegree) const {
  const std::size_t n = ambient_->numVars();
  const std::size_t total = engine_.ring()->numVars();
  auto xFree = [n](const Monomial& m) {
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] != 0) return false;
    }
    return true;
  };
  std::vector<Polynomial> out;
  for (const auto& g : engine_.reducedBasis(maxDegree, xFree)) {
    std::vector<Term> terms;
    terms.reserve(g.size());
    for (const auto& t : g.terms()) terms.push_back({t.monomial.slice(n, total), t.coefficient});
    out.push_back(Polynomial::fromCanonicalTerms(presentation_, std::move(terms)));
  }
  std::stable_sort(out.begin(), out.end(), [this](const Polynomial& a, const Polynomial& b) {
    const auto da = presentationDegree(a.leadMonomial());
    const auto db = presentationDegree(b.leadMonomial());
    if (da != db) return da < db;
    return presentation_->compare(a.leadMonomial(), b.leadMonomial()) < 0;
  });
  return out;
}

std::vector<Polynomial> kernelGenerators(const RingPtr& ambient, std::span<const Monomial> monomials,
                                         std::span<const Monomial> initialIdeal, const std::string& symbol) {
  TagIdeal tag(ambient, std::vector<Monomial>(monomials.begin(), monomials.end()), symbol,
               std::vector<Monomial>(initialIdeal.begin(), initialIdeal.end()));
  tag.ensure(std::nullopt);
  return tag.kernel(std::nullopt);
}

}  // namespace sagbi
