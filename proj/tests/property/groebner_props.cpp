#include <gtest/gtest.h>

#include "sagbi/groebner.hpp"
#include "support/test_util.hpp"

using namespace sagbi;
using namespace sagbi::test;

namespace {

constexpr int kCases = 120;

// Textbook multivariate division; returns the remainder.
Polynomial divide(Polynomial f, const std::vector<Polynomial>& basis) {
  Polynomial rem = Polynomial::zero(f.ring());
  while (!f.isZero()) {
    const Monomial lm = f.leadMonomial();
    const Rational lc = f.leadCoefficient();
    bool divided = false;
    for (const auto& g : basis) {
      if (!g.leadMonomial().divides(lm)) continue;
      f -= Polynomial::monomial(f.ring(), lm / g.leadMonomial(), lc / g.leadCoefficient()) * g;
      divided = true;
      break;
    }
    if (!divided) {
      const auto lt = Polynomial::monomial(f.ring(), lm, lc);
      rem += lt;
      f -= lt;
    }
  }
  return rem;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leadMonomial(), g.leadMonomial());
  const auto R = f.ring();
  return Polynomial::monomial(R, l / f.leadMonomial(), f.leadCoefficient().inverse()) * f -
         Polynomial::monomial(R, l / g.leadMonomial(), g.leadCoefficient().inverse()) * g;
}

RingPtr randomRing(Rng& rng) {
  switch (rng.uniform(0, 3)) {
    case 0: return ring("x,y,z", "grevlex");
    case 1: return ring("x,y", "lex");
    case 2: return ring("x,y,z", "weights(1,2,3)");
    default: return ring("t,x,y", "eliminate(1)");
  }
}

}  // namespace

TEST(GroebnerProperties, SPairCriterionOnCompleteBases) {
  Rng rng(21);
  for (int c = 0; c < kCases; ++c) {
    const auto R = randomRing(rng);
    std::vector<Polynomial> gens;
    const int k = rng.uniform(1, 3);
    for (int i = 0; i < k; ++i) gens.push_back(rng.polynomial(R, rng.uniform(1, 3), 2, 3));
    std::string desc;
    for (const auto& g : gens) desc += str(g) + "; ";
    SCOPED_TRACE(R->order().toString() + ": " + desc);
    const auto gb = buchberger(R, gens);
    ASSERT_TRUE(gb.complete);
    const auto& G = gb.generators;
    for (const auto& g : gens) ASSERT_TRUE(divide(g, G).isZero()) << str(g);
    for (std::size_t i = 0; i < G.size(); ++i) {
      ASSERT_TRUE(G[i].isMonic());
      for (std::size_t j = i + 1; j < G.size(); ++j) {
        ASSERT_TRUE(divide(spoly(G[i], G[j]), G).isZero()) << str(G[i]) << " / " << str(G[j]);
      }
      for (std::size_t j = 0; j < G.size(); ++j) {
        if (i == j) continue;
        for (const auto& t : G[i].terms()) ASSERT_FALSE(G[j].leadMonomial().divides(t.monomial));
      }
    }
  }
}

TEST(GroebnerProperties, ReduceModuloMatchesDivisionOnGroebnerBases) {
  Rng rng(22);
  for (int c = 0; c < kCases; ++c) {
    const auto R = randomRing(rng);
    std::vector<Polynomial> gens;
    for (int i = 0; i < 2; ++i) gens.push_back(rng.polynomial(R, rng.uniform(1, 3), 2, 3));
    const auto gb = buchberger(R, gens);
    const auto f = rng.polynomial(R, 4, 4);
    // remainders modulo a Groebner basis are unique
    ASSERT_EQ(reduceModulo(f, gb.generators), divide(f, gb.generators)) << str(f);
    const auto member = f * gens[0] + rng.polynomial(R, 2, 2) * gens[1];
    ASSERT_TRUE(reduceModulo(member, gb.generators).isZero()) << str(member);
  }
}
