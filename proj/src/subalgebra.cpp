#include "sagbi/subalgebra.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <ostream>

#include "sagbi/error.hpp"
#include "sagbi/format.hpp"

namespace sagbi {

std::string_view strategyName(Strategy s) {
  switch (s) {
    case Strategy::DegreeByDegree: return "degree";
    case Strategy::Incremental: return "incremental";
    case Strategy::Master: return "master";
  }
  return "master";
}

std::optional<Strategy> parseStrategy(std::string_view text) {
  if (text == "degree" || text == "degreebydegree" || text == "DegreeByDegree") return Strategy::DegreeByDegree;
  if (text == "incremental" || text == "Incremental") return Strategy::Incremental;
  if (text == "master" || text == "Master") return Strategy::Master;
  return std::nullopt;
}

std::string_view subductionMethodName(SubductionMethod m) { return m == SubductionMethod::Engine ? "engine" : "top"; }

std::optional<SubductionMethod> parseSubductionMethod(std::string_view text) {
  if (text == "top" || text == "Top") return SubductionMethod::Top;
  if (text == "engine" || text == "Engine") return SubductionMethod::Engine;
  return std::nullopt;
}

void SagbiOptions::validate() const {
  if (limit < 1) fail(ErrorKind::InvalidInput, "limit must be a positive integer");
  if (printLevel < 0) fail(ErrorKind::InvalidInput, "print level must be non-negative");
}

namespace {

std::vector<Monomial> leadsOf(std::span<const Polynomial> gens) {
  std::vector<Monomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.leadMonomial());
  return out;
}

std::vector<std::int64_t> leadDegrees(std::span<const Polynomial> gens) {
  std::vector<std::int64_t> out;
  for (const auto& g : gens) out.push_back(g.leadMonomial().totalDegree());
  return out;
}

std::string polyKey(const Polynomial& f) {
  std::string key;
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      key += std::to_string(t.monomial[i]);
      key += ',';
    }
    key += t.coefficient.toString();
    key += ';';
  }
  return key;
}

bool sortedByLeadDesc(const Polynomial& a, const Polynomial& b) {
  return a.ring()->compare(a.leadMonomial(), b.leadMonomial()) > 0;
}

/// Subduction against a fixed generator list whose tag ideal is `tag`.
class Subductor {
 public:
  Subductor(std::span<const Polynomial> gens, TagIdeal& tag, std::ostream* trace = nullptr)
      : gens_(gens), tag_(tag), powers_(gens.size()), trace_(trace) {}

  Polynomial remainder(const Polynomial& f) { return run(f, nullptr); }

  SubductionResult withQuotient(const Polynomial& f, const RingPtr& presentation) {
    std::vector<Term> q;
    Polynomial r = run(f, &q);
    return {std::move(r), Polynomial::fromTerms(presentation, std::move(q))};
  }

 private:
  const Polynomial& power(std::size_t i, Exponent k) {
    auto& p = powers_[i];
    if (p.empty()) p.push_back(Polynomial::constant(gens_[i].ring(), 1));
    while (p.size() <= static_cast<std::size_t>(k)) p.push_back(p.back() * gens_[i]);
    return p[static_cast<std::size_t>(k)];
  }

  Polynomial product(const std::vector<Exponent>& a, const RingPtr& ring) {
    auto it = products_.find(a);
    if (it != products_.end()) return it->second;
    std::optional<Polynomial> prod;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      if (!prod) prod = power(i, a[i]);
      else prod = *prod * power(i, a[i]);
    }
    Polynomial out = prod ? std::move(*prod) : Polynomial::constant(ring, 1);
    if (products_.size() < 4096) products_.emplace(a, out);
    return out;
  }

  Polynomial run(const Polynomial& f, std::vector<Term>* quotient) {
    const RingPtr& ring = f.ring();
    std::vector<Term> rest;
    Polynomial work = f;
    while (!work.isZero()) {
      const Term lead = work.leadTerm();
      std::optional<std::vector<Exponent>> a;
      if (lead.monomial.isOne()) {
        a = std::vector<Exponent>(gens_.size(), 0);
      } else if (!gens_.empty()) {
        a = tag_.factor(lead.monomial);
      }
      if (!a) {
        if (trace_) *trace_ << "--   keep " << formatMonomial(*ring, lead.monomial) << '\n';
        rest.push_back(lead);
        const auto& t = work.terms();
        work = Polynomial::fromCanonicalTerms(ring, std::vector<Term>(t.begin() + 1, t.end()));
        continue;
      }
      const Polynomial prod = product(*a, ring);
      const Rational c = lead.coefficient / prod.leadCoefficient();
      if (trace_) *trace_ << "--   subduct " << formatMonomial(*ring, lead.monomial) << '\n';
      work = work.subtractMultiple(c, Monomial(ring->numVars()), prod);
      if (quotient) quotient->push_back({Monomial(*a), c});
    }
    return Polynomial::fromCanonicalTerms(ring, std::move(rest));
  }

  std::span<const Polynomial> gens_;
  TagIdeal& tag_;
  std::vector<std::vector<Polynomial>> powers_;
  std::map<std::vector<Exponent>, Polynomial> products_;
  std::ostream* trace_;
};

std::vector<Polynomial> nonConstantGens(std::span<const Polynomial> gens, const Polynomial& f) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    requireSameRing(f, g);
    if (g.isZero()) fail(ErrorKind::InvalidInput, "subduction against a zero generator");
    if (!g.isConstant()) out.push_back(g);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Subring

Subring::Subring(std::shared_ptr<const detail::SubringData> data, std::shared_ptr<detail::CacheSlot> slot)
    : data_(std::move(data)), slot_(std::move(slot)) {}

void Subring::offer(const SagbiBasis& sb) const {
  const auto& cur = slot_->basis;
  bool take = !cur;
  if (cur && !cur->complete()) {
    take = sb.complete() || sb.processedDegree() > cur->processedDegree();
  }
  if (take) slot_->basis = std::make_shared<const SagbiBasis>(sb);
}

RingPtr Subring::presentationRing() const { return makePresentationRing(data_->symbol, leadDegrees(data_->gens)); }

Subring makeSubringAllowEmpty(const RingPtr& ring, std::span<const Polynomial> gens, std::string symbol) {
  if (symbol.empty()) fail(ErrorKind::InvalidInput, "empty generator symbol");
  auto data = std::make_shared<detail::SubringData>();
  data->ring = ring;
  data->symbol = std::move(symbol);
  for (const auto& g : gens) {
    if (g.ring() != ring) fail(ErrorKind::RingMismatch, "generators must share one ring");
    if (g.isZero() || g.isConstant()) continue;
    if (std::find(data->gens.begin(), data->gens.end(), g) != data->gens.end()) continue;
    data->gens.push_back(g);
  }
  return Subring(std::move(data), std::make_shared<detail::CacheSlot>());
}

Subring makeSubring(std::span<const Polynomial> gens, std::string symbol) {
  if (gens.empty()) fail(ErrorKind::InvalidInput, "a subring needs at least one generator");
  Subring s = makeSubringAllowEmpty(gens.front().ring(), gens, std::move(symbol));
  if (s.numGenerators() == 0) fail(ErrorKind::InvalidInput, "generator set has no non-constant polynomial");
  return s;
}

// ---------------------------------------------------------------------------
// Subduction

Polynomial subduct(std::span<const Polynomial> gens, const Polynomial& f) {
  const auto live = nonConstantGens(gens, f);
  if (live.empty()) return f.isConstant() ? Polynomial::zero(f.ring()) : f;
  TagIdeal tag(f.ring(), leadsOf(live));
  return Subductor(live, tag).remainder(f);
}

SubductionResult subductWithQuotient(std::span<const Polynomial> gens, const Polynomial& f, const std::string& symbol) {
  const auto live = nonConstantGens(gens, f);
  const RingPtr presentation = makePresentationRing(symbol, leadDegrees(live));
  if (live.empty()) {
    return {Polynomial::zero(f.ring()), Polynomial::constant(presentation, f.constantCoefficient())};
  }
  TagIdeal tag(f.ring(), leadsOf(live), symbol);
  return Subductor(live, tag).withQuotient(f, presentation);
}

std::vector<Polynomial> autoSubduce(std::span<const Polynomial> gens) {
  std::vector<std::optional<Polynomial>> cur;
  for (const auto& g : gens) {
    if (g.isZero() || g.isConstant()) continue;
    Polynomial m = g.monic();
    if (std::any_of(cur.begin(), cur.end(), [&](const auto& c) { return *c == m; })) continue;
    cur.emplace_back(std::move(m));
  }
  for (int pass = 0; pass < 64; ++pass) {
    bool changed = false;
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (cur[i]) order.push_back(i);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return sortedByLeadDesc(*cur[a], *cur[b]); });
    for (std::size_t i : order) {
      if (!cur[i]) continue;
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < cur.size(); ++j) {
        if (j != i && cur[j]) others.push_back(*cur[j]);
      }
      Polynomial r = others.empty() ? *cur[i] : subduct(others, *cur[i]);
      if (r.isZero() || r.isConstant()) {
        cur[i].reset();
        changed = true;
        continue;
      }
      r = r.monic();
      if (!(r == *cur[i])) {
        cur[i] = std::move(r);
        changed = true;
      }
    }
    if (!changed) break;
  }
  std::vector<Polynomial> out;
  for (auto& c : cur) {
    if (c) out.push_back(std::move(*c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// SagbiBasis

namespace {

std::vector<Polynomial> initialGenerators(std::span<const Polynomial> gens, const SagbiOptions& options) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(g.monic());
  if (options.autoSubduce) out = autoSubduce(out);
  return out;
}

}  // namespace

Subring SagbiBasis::subring() const {
  auto slot = slot_.lock();
  return Subring(data_, slot ? slot : std::make_shared<detail::CacheSlot>());
}

std::shared_ptr<TagIdeal> SagbiBasis::tag() const {
  if (!tag_) tag_ = std::make_shared<TagIdeal>(data_->ring, leadsOf(gens_), data_->symbol);
  return tag_;
}

SagbiBasis SagbiBasis::restore(const Subring& subring, std::vector<Polynomial> gens, std::int64_t processedDegree,
                               bool complete, SagbiOptions options, std::size_t lastRoundAdded) {
  options.validate();
  if (processedDegree < 0 || processedDegree > options.limit) {
    fail(ErrorKind::StateFormat, "processed degree outside [0, limit]");
  }
  for (const auto& g : gens) {
    if (g.ring() != subring.ambientRing()) fail(ErrorKind::RingMismatch, "generator outside the ambient ring");
    if (g.isZero() || g.isConstant() || !g.isMonic()) {
      fail(ErrorKind::StateFormat, "computation generators must be monic and non-constant");
    }
  }
  SagbiBasis sb;
  sb.data_ = subring.data();
  sb.slot_ = subring.slot();
  sb.gens_ = std::move(gens);
  if (!complete) {
    for (auto& g : initialGenerators(subring.generators(), options)) {
      if (g.leadMonomial().totalDegree() <= processedDegree) continue;
      if (std::find(sb.gens_.begin(), sb.gens_.end(), g) != sb.gens_.end()) continue;
      sb.pending_.push_back(std::move(g));
    }
  }
  sb.processedDegree_ = processedDegree;
  sb.complete_ = complete;
  sb.options_ = options;
  sb.lastRoundAdded_ = lastRoundAdded;
  return sb;
}

std::string SagbiBasis::summary() const {
  return std::string(complete_ ? "" : "Partial ") + "SAGBIBasis Computation Object with " +
         std::to_string(gens_.size()) + " generators, Limit = " + std::to_string(options_.limit) + ".";
}

// ---------------------------------------------------------------------------
// Completion loop

class SagbiRunner {
 public:
  SagbiRunner(SagbiBasis& sb, std::ostream* trace) : sb_(sb), trace_(sb.options_.printLevel > 0 ? trace : nullptr) {}

  void run() {
    const auto& opts = sb_.options_;
    prepare();
    while (true) {
      auto d = nextDegree();
      if (!d) {
        sb_.complete_ = true;
        if (trace_) *trace_ << "-- complete with " << sb_.gens_.size() << " generators\n";
        return;
      }
      if (*d > opts.limit) {
        sb_.processedDegree_ = std::max(sb_.processedDegree_, opts.limit);
        if (trace_) *trace_ << "-- stopped at limit " << opts.limit << " with " << sb_.gens_.size() << " generators\n";
        return;
      }
      const Strategy s = roundStrategy();
      ensure(*d, s);
      std::size_t kernelCount = 0;
      std::size_t added = 0;
      const std::size_t roundStart = sb_.gens_.size();
      {
        auto fresh = acceptBatch(takeInputs(*d));
        if (!fresh.empty()) {
          added += fresh.size();
          addGenerators(std::move(fresh), *d, s);
        }
      }
      while (true) {
        std::vector<Polynomial> pending;
        for (auto& h : sb_.tag_->kernel(*d)) {
          if (sb_.processed_->insert(polyKey(h)).second) pending.push_back(std::move(h));
        }
        if (pending.empty()) break;
        kernelCount += pending.size();
        auto fresh = processKernel(pending);
        if (fresh.empty()) continue;
        added += fresh.size();
        addGenerators(std::move(fresh), *d, s);
      }
      if (sb_.gens_.size() - roundStart >= 2) rebatch(roundStart, *d);
      sb_.processedDegree_ = *d;
      sb_.lastRoundAdded_ = added;
      if (trace_) {
        *trace_ << "-- degree " << *d << ": " << kernelCount << " syzygies, " << added << " new generators, "
                << sb_.gens_.size() << " total (" << strategyName(s) << ")\n";
      }
      if (added == 0 && opts.autoSubduceOnPartialCompletion) partialAutoSubduce();
    }
  }

 private:
  void prepare() {
    if (!sb_.processed_) {
      sb_.processed_ = std::make_shared<std::set<std::string>>();
      if (sb_.processedDegree_ > 0) {
        auto tag = sb_.tag();
        tag->ensure(sb_.processedDegree_);
        for (const auto& h : tag->kernel(sb_.processedDegree_)) sb_.processed_->insert(polyKey(h));
      }
    }
    sb_.tag();
  }

  std::optional<std::int64_t> nextDegree() const {
    const auto& tag = *sb_.tag_;
    std::optional<std::int64_t> best = tag.minPendingDegree();
    for (const auto& g : sb_.pending_) {
      const std::int64_t deg = g.leadMonomial().totalDegree();
      if (!best || deg < *best) best = deg;
    }
    const auto through = tag.computedThrough();
    if (through) {
      const auto bound = *through == std::numeric_limits<std::int64_t>::max() ? std::nullopt : through;
      for (const auto& h : tag.kernel(bound)) {
        const auto deg = tag.presentationDegree(h.leadMonomial());
        if (best && deg >= *best) break;
        if (!sb_.processed_->count(polyKey(h))) {
          best = deg;
          break;
        }
      }
    }
    return best;
  }

  Strategy roundStrategy() const {
    const Strategy s = sb_.options_.strategy;
    if (s != Strategy::Master) return s;
    return sb_.lastRoundAdded_ >= 2 ? Strategy::DegreeByDegree : Strategy::Incremental;
  }

  void ensure(std::int64_t d, Strategy s) {
    if (s == Strategy::Incremental) sb_.tag_->ensure(std::nullopt);
    else sb_.tag_->ensure(d);
  }

  std::ostream* stepTrace() const { return sb_.options_.printLevel >= 2 ? trace_ : nullptr; }

  std::vector<Polynomial> takeInputs(std::int64_t d) {
    std::vector<Polynomial> rems;
    std::vector<Polynomial> later;
    Subductor sub(sb_.gens_, *sb_.tag_, stepTrace());
    for (auto& g : sb_.pending_) {
      if (g.leadMonomial().totalDegree() > d) {
        later.push_back(std::move(g));
        continue;
      }
      if (stepTrace()) *stepTrace() << "-- input " << formatPolynomial(g) << '\n';
      Polynomial r = sub.remainder(g);
      if (!r.isZero() && !r.isConstant()) rems.push_back(r.monic());
    }
    sb_.pending_ = std::move(later);
    return rems;
  }

  std::vector<Polynomial> processKernel(const std::vector<Polynomial>& kernel) {
    Subductor sub(sb_.gens_, *sb_.tag_, stepTrace());
    std::vector<Polynomial> rems;
    for (const auto& h : kernel) {
      const Polynomial s = evaluateMap(h, sb_.gens_);
      if (stepTrace()) *stepTrace() << "-- lift " << formatPolynomial(h) << '\n';
      Polynomial r = sub.remainder(s);
      if (!r.isZero() && !r.isConstant()) rems.push_back(r.monic());
    }
    return acceptBatch(std::move(rems));
  }

  std::vector<Polynomial> acceptBatch(std::vector<Polynomial> rems) {
    std::ostream* stepTrace = this->stepTrace();
    std::stable_sort(rems.begin(), rems.end(),
                     [](const Polynomial& a, const Polynomial& b) { return sortedByLeadDesc(b, a); });
    if (rems.size() <= 1) return rems;
    // Later remainders are subducted against the earlier ones of the same batch.
    TagIdeal local(*sb_.tag_);
    std::vector<Polynomial> all = sb_.gens_;
    std::vector<Polynomial> accepted;
    for (auto& r : rems) {
      if (!accepted.empty()) {
        r = Subductor(all, local, stepTrace).remainder(r);
        if (r.isZero() || r.isConstant()) continue;
        r = r.monic();
      }
      local.addLeads(std::span<const Monomial>(&r.leadMonomial(), 1));
      all.push_back(r);
      accepted.push_back(std::move(r));
    }
    return accepted;
  }

  void addGenerators(std::vector<Polynomial> fresh, std::int64_t d, Strategy s) {
    const auto newLeads = leadsOf(fresh);
    for (auto& f : fresh) {
      if (stepTrace()) *stepTrace() << "-- new generator " << formatPolynomial(f) << '\n';
      sb_.gens_.push_back(std::move(f));
    }
    if (s == Strategy::Incremental) {
      sb_.tag_->addLeads(newLeads);
    } else {
      rebuildTag();
    }
    ensure(d, s);
  }

  // Generators found across the passes of one degree are inter-reduced as a single batch.
  void rebatch(std::size_t first, std::int64_t d) {
    std::vector<Polynomial> batch(sb_.gens_.begin() + static_cast<std::ptrdiff_t>(first), sb_.gens_.end());
    const auto before = leadsOf(batch);
    sb_.gens_.resize(first);
    rebuildTag();
    auto merged = acceptBatch(batch);
    auto after = leadsOf(merged);
    for (auto& f : merged) sb_.gens_.push_back(std::move(f));
    rebuildTag();
    sb_.tag_->ensure(d);
    auto sortedLeads = [&](std::vector<Monomial> v) {
      std::sort(v.begin(), v.end(), [](const Monomial& a, const Monomial& b) {
        return std::ranges::lexicographical_compare(a.exponents(), b.exponents());
      });
      return v;
    };
    sb_.processed_->clear();
    if (sortedLeads(before) != sortedLeads(after)) return;
    for (const auto& h : sb_.tag_->kernel(d)) sb_.processed_->insert(polyKey(h));
  }

  void rebuildTag() {
    sb_.tag_ = std::make_shared<TagIdeal>(sb_.data_->ring, leadsOf(sb_.gens_), sb_.data_->symbol);
  }

  void partialAutoSubduce() {
    auto reduced = autoSubduce(sb_.gens_);
    if (reduced == sb_.gens_) return;
    if (trace_) *trace_ << "-- generators subducted against each other: " << reduced.size() << " remain\n";
    sb_.gens_ = std::move(reduced);
    rebuildTag();
    sb_.processed_->clear();
    sb_.processedDegree_ = 0;
  }

  SagbiBasis& sb_;
  std::ostream* trace_;
};

SagbiBasis sagbiFrom(const Subring& subring, const SagbiBasis* start, const SagbiOptions& options, std::ostream* trace) {
  options.validate();
  SagbiBasis sb;
  if (!start) {
    sb.data_ = subring.data();
    sb.slot_ = subring.slot();
    sb.options_ = options;
    sb.pending_ = initialGenerators(subring.generators(), options);
    if (trace && options.printLevel > 0) {
      *trace << "-- starting with " << sb.pending_.size() << " generators\n";
    }
  } else {
    sb = *start;
    if (sb.tag_) sb.tag_ = std::make_shared<TagIdeal>(*sb.tag_);
    if (sb.processed_) sb.processed_ = std::make_shared<std::set<std::string>>(*sb.processed_);
    if (options.renewOptions) {
      sb.options_ = options;
    } else {
      sb.options_.limit = options.limit;
      sb.options_.printLevel = options.printLevel;
    }
    sb.options_.recompute = false;
    sb.options_.renewOptions = false;
    if (sb.complete_ || sb.processedDegree_ >= sb.options_.limit) {
      if (sb.processedDegree_ > sb.options_.limit) return *start;
      return sb;
    }
  }
  SagbiRunner(sb, trace).run();
  subring.offer(sb);
  return sb;
}

SagbiBasis sagbi(const Subring& subring, const SagbiOptions& options, std::ostream* trace) {
  const auto cached = subring.cachedBasis();
  if (cached && !options.recompute) return sagbiFrom(subring, cached.get(), options, trace);
  return sagbiFrom(subring, nullptr, options, trace);
}

SagbiBasis sagbi(const SagbiBasis& basis, const SagbiOptions& options, std::ostream* trace) {
  if (options.recompute) return sagbiFrom(basis.subring(), nullptr, options, trace);
  return sagbiFrom(basis.subring(), &basis, options, trace);
}

SagbiBasis sagbi(std::span<const Polynomial> gens, const SagbiOptions& options, std::ostream* trace) {
  return sagbi(makeSubring(gens), options, trace);
}

std::vector<Polynomial> subalgebraBasis(const Subring& subring, const SagbiOptions& options) {
  return sagbi(subring, options).generators();
}

std::vector<Polynomial> subalgebraBasis(std::span<const Polynomial> gens, const SagbiOptions& options) {
  return sagbi(gens, options).generators();
}

// ---------------------------------------------------------------------------
// Certification

bool isSAGBI(const SagbiBasis& basis) {
  if (basis.complete_) return true;
  auto tag = std::make_shared<TagIdeal>(*basis.tag());
  tag->ensure(std::nullopt);
  Subductor sub(basis.gens_, *tag);
  for (const auto& g : basis.pending_) {
    if (!sub.remainder(g).isZero()) return false;
  }
  for (const auto& h : tag->kernel(std::nullopt)) {
    if (!sub.remainder(evaluateMap(h, basis.gens_)).isZero()) return false;
  }
  basis.tag_ = std::move(tag);
  basis.pending_.clear();
  basis.complete_ = true;
  basis.subring().offer(basis);
  return true;
}

bool isSAGBI(const Subring& subring) {
  if (auto cached = subring.cachedBasis()) return isSAGBI(*cached);
  std::vector<Polynomial> gens;
  for (const auto& g : subring.generators()) gens.push_back(g.monic());
  SagbiBasis candidate = SagbiBasis::restore(subring, std::move(gens), 0, false, SagbiOptions{});
  if (!isSAGBI(candidate)) return false;
  return true;
}

}  // namespace sagbi
