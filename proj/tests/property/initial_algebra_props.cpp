#include <gtest/gtest.h>

#include "sagbi/subalgebra.hpp"
#include "support/test_util.hpp"

using namespace sagbi;
using namespace sagbi::test;

namespace {

constexpr int kCases = 120;
constexpr int kDegree = 6;

// Homogeneous generators of positive degree in at most three variables.
std::vector<Polynomial> randomHomogeneousGens(Rng& rng, const RingPtr& R) {
  std::vector<Polynomial> gens;
  const int k = rng.uniform(1, 3);
  while (static_cast<int>(gens.size()) < k) {
    auto g = rng.homogeneous(R, rng.uniform(1, 3), rng.uniform(1, 3));
    if (!g.isZero()) gens.push_back(g);
  }
  return gens;
}

RingPtr randomRing(Rng& rng) {
  switch (rng.uniform(0, 3)) {
    case 0: return ring("x,y", "grevlex");
    case 1: return ring("x,y", "lex");
    case 2: return ring("x,y,z", "grevlex");
    default: return ring("x,y,z", "lex");
  }
}

}  // namespace

// in(A)_d from linear algebra on products of the inputs must equal the degree-d
// part of the monoid generated by the computed lead monomials.
TEST(InitialAlgebraProperties, MatchesLinearAlgebraOracle) {
  Rng rng(41);
  for (int c = 0; c < kCases; ++c) {
    const auto R = randomRing(rng);
    const auto gens = randomHomogeneousGens(rng, R);
    std::string desc;
    for (const auto& g : gens) desc += str(g) + "; ";
    SCOPED_TRACE(R->order().toString() + ": " + desc);

    SagbiOptions o;
    o.limit = kDegree;
    const auto sb = sagbi::sagbi(gens, o);
    const int through = sb.complete() ? kDegree : static_cast<int>(std::min<std::int64_t>(sb.processedDegree(), kDegree));
    const auto leads = leadMonomials(sb.generators());

    for (int d = 1; d <= through; ++d) {
      EchelonSpan span;
      for (const auto& p : productsOfDegree(gens, d)) span.insert(p);
      std::set<Monomial, MonomialLess> fromBasis;
      for (const auto& m : monomialsOfDegree(R->numVars(), d)) {
        if (inMonoid(m, leads)) fromBasis.insert(m);
      }
      ASSERT_EQ(span.pivots(), fromBasis) << "degree " << d;
      for (const auto& g : sb.generators()) {
        if (g.leadMonomial().totalDegree() == d) ASSERT_TRUE(span.contains(g)) << str(g);
      }
    }
  }
}
