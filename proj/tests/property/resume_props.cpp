#include <gtest/gtest.h>

#include "sagbi/state.hpp"
#include "sagbi/subalgebra.hpp"
#include "support/test_util.hpp"

using namespace sagbi;
using namespace sagbi::test;

namespace {

constexpr int kCases = 120;

std::vector<std::string> strings(const std::vector<Polynomial>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(str(p));
  return out;
}

std::vector<Polynomial> randomGens(Rng& rng, const RingPtr& R) {
  std::vector<Polynomial> gens;
  const int k = rng.uniform(2, 3);
  const bool homogeneous = rng.coin();
  while (static_cast<int>(gens.size()) < k) {
    auto g = homogeneous ? rng.homogeneous(R, rng.uniform(1, 3), rng.uniform(1, 3))
                         : rng.polynomial(R, rng.uniform(1, 3), 3);
    if (!g.isConstant()) gens.push_back(g);
  }
  return gens;
}

}  // namespace

TEST(ResumeProperties, ResumedEqualsFresh) {
  Rng rng(61);
  for (int c = 0; c < kCases; ++c) {
    const auto R = rng.coin() ? ring("x,y") : ring("x,y,z");
    const auto gens = randomGens(rng, R);
    const int a = rng.uniform(1, 4);
    const int b = rng.uniform(a + 1, 8);
    std::string desc;
    for (const auto& g : gens) desc += str(g) + "; ";
    SCOPED_TRACE(desc + " limits " + std::to_string(a) + " -> " + std::to_string(b));

    SagbiOptions o;
    o.limit = b;
    const auto fresh = sagbi::sagbi(makeSubring(gens), o);
    o.limit = a;
    const auto partial = sagbi::sagbi(makeSubring(gens), o);
    o.limit = b;
    const auto resumed = sagbi::sagbi(partial, o);
    ASSERT_EQ(strings(resumed.generators()), strings(fresh.generators()));
    ASSERT_EQ(resumed.complete(), fresh.complete());
    ASSERT_EQ(resumed.processedDegree(), fresh.processedDegree());

    const auto reloaded = parseState(serializeState(partial)).basis;
    const auto viaState = sagbi::sagbi(reloaded, o);
    ASSERT_EQ(strings(viaState.generators()), strings(fresh.generators()));
    ASSERT_EQ(viaState.complete(), fresh.complete());
  }
}

TEST(ResumeProperties, RepeatedRunsAreIdentical) {
  Rng rng(62);
  for (int c = 0; c < kCases; ++c) {
    const auto R = rng.coin() ? ring("x,y") : ring("x,y,z", "lex");
    const auto gens = randomGens(rng, R);
    SagbiOptions o;
    o.limit = rng.uniform(2, 7);
    o.strategy = static_cast<Strategy>(rng.uniform(0, 2));
    const auto first = sagbi::sagbi(makeSubring(gens), o);
    const auto second = sagbi::sagbi(makeSubring(gens), o);
    ASSERT_EQ(strings(first.generators()), strings(second.generators()));
    ASSERT_EQ(serializeState(first), serializeState(second));
  }
}
