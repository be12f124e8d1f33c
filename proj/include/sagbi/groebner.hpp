#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sagbi/polynomial.hpp"
#include "sagbi/ring.hpp"

namespace sagbi {

/// Reduced, monic Groebner basis, possibly truncated at a degree bound.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> generators;
  std::optional<std::int64_t> degreeBound;
  bool complete = false;
};

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g);

/// Full normal form: no monomial of the result is divisible by a basis lead.
Polynomial reduceModulo(const Polynomial& f, std::span<const Polynomial> basis);

GroebnerBasis buchberger(std::span<const Polynomial> gens, std::optional<std::int64_t> degreeBound = std::nullopt);
GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens,
                         std::optional<std::int64_t> degreeBound = std::nullopt);

/// Monic lead terms of a complete basis.
std::vector<Term> initialIdealGens(const GroebnerBasis& gb);

/// Elements of a complete basis free of the first `blockIndex` order blocks.
std::vector<Polynomial> eliminationSubring(const GroebnerBasis& gb, std::size_t blockIndex);

/// R/I with the quotient basis computed once here.
RingPtr quotientRing(const RingPtr& base, std::vector<Polynomial> ideal);

/// Incremental Buchberger engine.
///
/// Pairs are processed by increasing graded degree of their lcm (ties by the
/// ring order on the lcm), so for ideals homogeneous under `grading` a run
/// stopped at degree d is a Groebner basis through degree d.  Generators can
/// be added at any time, and the ring can be widened with new trailing
/// variables as long as the order on old monomials is unchanged.
class GroebnerEngine {
 public:
  explicit GroebnerEngine(RingPtr ring, std::vector<std::int64_t> grading = {});

  void addGenerator(const Polynomial& f);
  /// Processes every pending item of degree <= `degree` (all of them for nullopt).
  void computeTo(std::optional<std::int64_t> degree);

  bool complete() const { return pairs_.empty() && inputs_.empty(); }
  std::optional<std::int64_t> minPendingDegree() const;
  /// Largest degree through which the basis is known to be complete.
  std::optional<std::int64_t> computedThrough() const { return computedThrough_; }

  /// Reduced monic basis elements, ascending by lead monomial.
  std::vector<Polynomial> reducedBasis(std::optional<std::int64_t> maxDegree = std::nullopt,
                                       const std::function<bool(const Monomial&)>& leadFilter = {}) const;
  Polynomial reduce(const Polynomial& f) const;

  void rebase(RingPtr ring, std::vector<std::int64_t> grading);

  const RingPtr& ring() const { return ring_; }
  std::int64_t degree(const Monomial& m) const { return m.weightedDegree(grading_); }
  std::size_t liveCount() const;
  std::size_t pairsReduced() const { return pairsReduced_; }

 private:
  struct Element {
    Polynomial poly;
    std::uint64_t mask;
    std::int64_t degree;
    bool live;
  };
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::int64_t degree;
  };
  struct Input {
    Polynomial poly;
    std::int64_t degree;
  };

  std::vector<Term> normalForm(std::vector<Term> terms, bool tailToo) const;
  void insert(Polynomial h);
  std::optional<std::size_t> nextPair() const;
  bool pairBefore(const Pair& a, const Pair& b) const;

  RingPtr ring_;
  std::vector<std::int64_t> grading_;
  std::vector<Element> basis_;
  std::vector<Pair> pairs_;
  std::vector<Input> inputs_;
  std::optional<std::int64_t> computedThrough_;
  std::size_t pairsReduced_ = 0;
};

/// The reduction ("tag") ideal ({y_i - m_i}) + in(I) in k[x, y], for lead
/// monomials m_i of a generator list, under an order eliminating x.
///
/// Its x-free Groebner basis elements generate the kernel of the monomial
/// map y_i -> m_i (modulo in(I)); the normal form of a monomial x^e is a
/// y-monomial exactly when x^e is a product of the m_i.
class TagIdeal {
 public:
  TagIdeal(RingPtr ambient, std::vector<Monomial> leads, std::string symbol = "p",
           std::optional<std::vector<Monomial>> initialIdeal = std::nullopt);

  void addLeads(std::span<const Monomial> leads);

  std::size_t size() const { return leads_.size(); }
  const std::vector<Monomial>& leads() const { return leads_; }
  const std::vector<std::int64_t>& leadDegrees() const { return leadDegrees_; }
  const RingPtr& ambient() const { return ambient_; }
  const RingPtr& presentationRing() const { return presentation_; }
  const RingPtr& tagRing() const { return engine_.ring(); }

  void ensure(std::optional<std::int64_t> degree) { engine_.computeTo(degree); }
  bool complete() const { return engine_.complete(); }
  std::optional<std::int64_t> minPendingDegree() const { return engine_.minPendingDegree(); }
  std::optional<std::int64_t> computedThrough() const { return engine_.computedThrough(); }

  /// Exponents a with prod m_i^a_i = m, or nullopt. Extends the basis as needed.
  std::optional<std::vector<Exponent>> factor(const Monomial& m);

  /// Kernel generators of graded degree <= maxDegree, in the presentation
  /// ring, ascending by (degree, lead). The caller ensures the basis is
  /// computed through maxDegree.
  std::vector<Polynomial> kernel(std::optional<std::int64_t> maxDegree) const;

  std::int64_t presentationDegree(const Monomial& y) const { return y.weightedDegree(leadDegrees_); }

 private:
  void buildRings();
  Polynomial tagPolynomial(std::size_t index) const;

  RingPtr ambient_;
  std::string symbol_;
  std::vector<Monomial> leads_;
  std::vector<std::int64_t> leadDegrees_;
  std::vector<Monomial> initialIdeal_;
  RingPtr presentation_;
  GroebnerEngine engine_;
};

/// Presentation-ring order used for kernels: y-degree graded by the lead degrees.
MonomialOrder presentationOrder(const std::vector<std::int64_t>& degrees);
RingPtr makePresentationRing(const std::string& symbol, const std::vector<std::int64_t>& degrees);

/// Kernel of y_i -> monomials[i] modulo the monomial ideal `initialIdeal`.
std::vector<Polynomial> kernelGenerators(const RingPtr& ambient, std::span<const Monomial> monomials,
                                         std::span<const Monomial> initialIdeal, const std::string& symbol = "p");

}  // namespace sagbi
