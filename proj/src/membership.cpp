#include "sagbi/membership.hpp"

#include <algorithm>

#include "sagbi/error.hpp"

namespace sagbi {

namespace detail {

/// Complete Groebner basis of I + (y_i - g_i) in k[x, y], x eliminated.
struct ExtrinsicData {
  RingPtr tagRing;
  RingPtr presentation;
  std::size_t ambientVars;
  GroebnerEngine engine;
};

}  // namespace detail

namespace {

std::shared_ptr<detail::ExtrinsicData> extrinsic(const Subring& s) {
  auto& slot = s.slot();
  if (slot->extrinsic) return slot->extrinsic;
  const RingPtr& ring = s.ambientRing();
  const std::size_t n = ring->numVars();
  std::vector<std::int64_t> degrees;
  for (const auto& g : s.generators()) degrees.push_back(g.leadMonomial().totalDegree());
  std::vector<std::string> names = ring->variableNames();
  for (std::size_t i = 0; i < degrees.size(); ++i) names.push_back("$" + s.generatorSymbol() + "_" + std::to_string(i + 1));
  std::vector<std::pair<std::size_t, MonomialOrder>> blocks;
  blocks.emplace_back(n, ring->order());
  if (!degrees.empty()) blocks.emplace_back(degrees.size(), presentationOrder(degrees));
  RingPtr tagRing = PolyRing::make(std::move(names), MonomialOrder::eliminate(n, MonomialOrder::blocks(std::move(blocks))));
  std::vector<std::int64_t> grading(n, 1);
  grading.insert(grading.end(), degrees.begin(), degrees.end());

  const std::size_t total = tagRing->numVars();
  auto lift = [&](const Polynomial& p) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) terms.push_back({t.monomial.extended(total), t.coefficient});
    return Polynomial::fromTerms(tagRing, std::move(terms));
  };
  auto data = std::make_shared<detail::ExtrinsicData>(
      detail::ExtrinsicData{tagRing, makePresentationRing(s.generatorSymbol(), degrees), n,
                            GroebnerEngine(tagRing, grading)});
  for (const auto& q : ring->quotientBasis()) data->engine.addGenerator(lift(q));
  for (std::size_t i = 0; i < s.numGenerators(); ++i) {
    data->engine.addGenerator(lift(s.generators()[i]) - Polynomial::variable(tagRing, n + i));
  }
  data->engine.computeTo(std::nullopt);
  slot->extrinsic = data;
  return data;
}

struct ExtrinsicSplit {
  Polynomial yPart;  // in the presentation ring
  bool xFree;
};

ExtrinsicSplit extrinsicReduce(const Polynomial& f, const Subring& s) {
  if (f.ring() != s.ambientRing()) fail(ErrorKind::RingMismatch, "polynomial is not in the subring's ambient ring");
  auto data = extrinsic(s);
  const std::size_t n = data->ambientVars;
  const std::size_t total = data->tagRing->numVars();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) terms.push_back({t.monomial.extended(total), t.coefficient});
  const Polynomial h = data->engine.reduce(Polynomial::fromTerms(data->tagRing, std::move(terms)));
  std::vector<Term> y;
  bool xFree = true;
  for (const auto& t : h.terms()) {
    bool hasX = false;
    for (std::size_t i = 0; i < n; ++i) hasX = hasX || t.monomial[i] != 0;
    if (hasX) xFree = false;
    else y.push_back({t.monomial.slice(n, total), t.coefficient});
  }
  return {Polynomial::fromTerms(data->presentation, std::move(y)), xFree};
}

Polynomial evaluateOn(const Polynomial& q, const Subring& s) {
  if (s.numGenerators() == 0) return Polynomial::constant(s.ambientRing(), q.constantCoefficient());
  return evaluateMap(q, s.generators());
}

bool certified(const Subring& s) {
  auto cached = s.cachedBasis();
  return cached && cached->complete();
}

}  // namespace

Polynomial normalForm(const Polynomial& f, const SagbiBasis& sb) {
  if (f.ring() != sb.ring()) fail(ErrorKind::RingMismatch, "polynomial is not in the subring's ambient ring");
  return subduct(sb.generators(), f);
}

Polynomial normalForm(const Polynomial& f, const Subring& s) {
  if (certified(s)) return normalForm(f, *s.cachedBasis());
  const auto split = extrinsicReduce(f, s);
  return f - evaluateOn(split.yPart, s);
}

Polynomial quotientCoefficients(const Polynomial& f, const SagbiBasis& sb) {
  if (f.ring() != sb.ring()) fail(ErrorKind::RingMismatch, "polynomial is not in the subring's ambient ring");
  return subductWithQuotient(sb.generators(), f, sb.subring().generatorSymbol()).quotient;
}

Polynomial quotientCoefficients(const Polynomial& f, const Subring& s) {
  if (certified(s)) return quotientCoefficients(f, *s.cachedBasis());
  return extrinsicReduce(f, s).yPart;
}

bool groebnerMembershipTest(const Polynomial& f, const Subring& s) { return extrinsicReduce(f, s).xFree; }

IntersectedSubring subringIntersection(const Subring& a, const Subring& b, const SagbiOptions& options,
                                       std::ostream* trace) {
  const RingPtr& ring = a.ambientRing();
  if (ring != b.ambientRing()) fail(ErrorKind::RingMismatch, "subrings live in different rings");
  const RingPtr base = ring->isQuotient() ? ring->base() : ring;
  const std::size_t n = ring->numVars();

  std::string tName = "t";
  for (int k = 0; ring->variableIndex(tName); ++k) tName = "t" + std::to_string(k);
  std::vector<std::string> names{tName};
  names.insert(names.end(), ring->variableNames().begin(), ring->variableNames().end());
  std::vector<std::pair<std::size_t, MonomialOrder>> blocks;
  blocks.emplace_back(1, MonomialOrder::lex());
  blocks.emplace_back(n, base->order());
  RingPtr extended = PolyRing::make(std::move(names), MonomialOrder::eliminate(1, MonomialOrder::blocks(std::move(blocks))));

  std::vector<std::size_t> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i] = i + 1;
  if (ring->isQuotient()) {
    std::vector<Polynomial> ideal;
    for (const auto& q : ring->quotientIdeal()) ideal.push_back(mapVariables(q, extended, up));
    extended = quotientRing(extended, std::move(ideal));
  }

  const Polynomial t = Polynomial::variable(extended, 0);
  const Polynomial oneMinusT = Polynomial::constant(extended, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * mapVariables(f, extended, up));
  for (const auto& g : b.generators()) gens.push_back(oneMinusT * mapVariables(g, extended, up));
  gens.push_back(t);

  const SagbiBasis sb = sagbi(makeSubring(gens), options, trace);
  std::vector<std::size_t> down(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) down[i + 1] = i;
  std::vector<Polynomial> selected;
  for (const auto& g : selectInSubring(1, sb.generators())) selected.push_back(mapVariables(g, ring, down));

  return {makeSubringAllowEmpty(ring, selected, a.generatorSymbol()), a, b, sb.complete()};
}

}  // namespace sagbi
