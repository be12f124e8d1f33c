#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sagbi/groebner.hpp"
#include "sagbi/polynomial.hpp"
#include "sagbi/ring.hpp"

namespace sagbi {

enum class Strategy { DegreeByDegree, Incremental, Master };
enum class SubductionMethod { Top, Engine };

std::string_view strategyName(Strategy s);
std::optional<Strategy> parseStrategy(std::string_view text);
std::string_view subductionMethodName(SubductionMethod m);
std::optional<SubductionMethod> parseSubductionMethod(std::string_view text);

struct SagbiOptions {
  std::int64_t limit = 20;
  Strategy strategy = Strategy::Master;
  SubductionMethod subductionMethod = SubductionMethod::Top;
  bool autoSubduce = true;
  bool autoSubduceOnPartialCompletion = false;
  int printLevel = 0;
  bool recompute = false;
  bool renewOptions = false;

  void validate() const;
  friend bool operator==(const SagbiOptions&, const SagbiOptions&) = default;
};

class SagbiBasis;

namespace detail {

struct SubringData {
  RingPtr ring;
  std::vector<Polynomial> gens;
  std::string symbol;
};

struct ExtrinsicData;

struct CacheSlot {
  std::shared_ptr<const SagbiBasis> basis;
  std::shared_ptr<ExtrinsicData> extrinsic;
};

}  // namespace detail

/// A finitely generated subalgebra of a (quotient) polynomial ring.
///
/// Copies share the computation cache, which holds the furthest-advanced
/// SagbiBasis produced for this subring.
class Subring {
 public:
  const RingPtr& ambientRing() const { return data_->ring; }
  const std::vector<Polynomial>& generators() const { return data_->gens; }
  std::size_t numGenerators() const { return data_->gens.size(); }
  const std::string& generatorSymbol() const { return data_->symbol; }

  std::shared_ptr<const SagbiBasis> cachedBasis() const { return slot_->basis; }
  /// Stores `sb` unless the cache already holds something at least as far along.
  void offer(const SagbiBasis& sb) const;

  /// Presentation ring symbol_1..symbol_s for the current generators.
  RingPtr presentationRing() const;

  Subring(std::shared_ptr<const detail::SubringData> data, std::shared_ptr<detail::CacheSlot> slot);

  const std::shared_ptr<const detail::SubringData>& data() const { return data_; }
  const std::shared_ptr<detail::CacheSlot>& slot() const { return slot_; }

 private:
  std::shared_ptr<const detail::SubringData> data_;
  std::shared_ptr<detail::CacheSlot> slot_;
};

/// Drops zero and constant generators and duplicates; throws when none remain.
Subring makeSubring(std::span<const Polynomial> gens, std::string symbol = "p");
/// Like makeSubring but allows an empty generator list (the algebra k).
Subring makeSubringAllowEmpty(const RingPtr& ring, std::span<const Polynomial> gens, std::string symbol = "p");

/// State of a (possibly partial) subalgebra basis computation.
class SagbiBasis {
 public:
  Subring subring() const;
  const RingPtr& ring() const { return data_->ring; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::int64_t processedDegree() const { return processedDegree_; }
  bool complete() const { return complete_; }
  const SagbiOptions& options() const { return options_; }
  /// Generators added in the last processed degree; steers the master strategy.
  std::size_t lastRoundAdded() const { return lastRoundAdded_; }

  /// Rebuilds a computation object from persisted fields.
  static SagbiBasis restore(const Subring& subring, std::vector<Polynomial> gens, std::int64_t processedDegree,
                            bool complete, SagbiOptions options, std::size_t lastRoundAdded = 0);

  std::string summary() const;

 private:
  friend class SagbiRunner;
  friend bool isSAGBI(const SagbiBasis&);
  friend SagbiBasis sagbiFrom(const Subring&, const SagbiBasis*, const SagbiOptions&, std::ostream*);

  SagbiBasis() = default;
  std::shared_ptr<TagIdeal> tag() const;

  std::shared_ptr<const detail::SubringData> data_;
  std::weak_ptr<detail::CacheSlot> slot_;
  std::vector<Polynomial> gens_;
  // Input generators whose degree the loop has not reached yet.
  mutable std::vector<Polynomial> pending_;
  std::int64_t processedDegree_ = 0;
  mutable bool complete_ = false;
  SagbiOptions options_;
  std::size_t lastRoundAdded_ = 0;
  mutable std::shared_ptr<TagIdeal> tag_;
  std::shared_ptr<std::set<std::string>> processed_;
};

struct SubductionResult {
  Polynomial remainder;
  /// Quotient in the presentation ring of the generators used.
  Polynomial quotient;
};

Polynomial subduct(std::span<const Polynomial> gens, const Polynomial& f);
SubductionResult subductWithQuotient(std::span<const Polynomial> gens, const Polynomial& f,
                                     const std::string& symbol = "p");

/// Subducts each generator against the others until nothing changes.
std::vector<Polynomial> autoSubduce(std::span<const Polynomial> gens);

SagbiBasis sagbi(const Subring& subring, const SagbiOptions& options = {}, std::ostream* trace = nullptr);
SagbiBasis sagbi(const SagbiBasis& basis, const SagbiOptions& options = {}, std::ostream* trace = nullptr);
SagbiBasis sagbi(std::span<const Polynomial> gens, const SagbiOptions& options = {}, std::ostream* trace = nullptr);

std::vector<Polynomial> subalgebraBasis(const Subring& subring, const SagbiOptions& options = {});
std::vector<Polynomial> subalgebraBasis(std::span<const Polynomial> gens, const SagbiOptions& options = {});

bool isSAGBI(const SagbiBasis& basis);
bool isSAGBI(const Subring& subring);

}  // namespace sagbi
