#include <gtest/gtest.h>

#include "sagbi/membership.hpp"
#include "support/test_util.hpp"

using namespace sagbi;
using namespace sagbi::test;

namespace {

SagbiOptions limit(int d) {
  SagbiOptions o;
  o.limit = d;
  return o;
}

}  // namespace

TEST(NormalForm, PowerSumIsZero) {
  const auto R = ring("x_1..x_3");
  const auto A = makeSubring(Ps(R, "x_1+x_2+x_3, x_1^2+x_2^2+x_3^2, x_1^3+x_2^3+x_3^3"));
  const auto sb = sagbi::sagbi(A);
  EXPECT_TRUE(normalForm(P(R, "x_1^4+x_2^4+x_3^4"), sb).isZero());
  EXPECT_TRUE(normalForm(P(R, "x_1^4+x_2^4+x_3^4"), A).isZero());
}

TEST(NormalForm, PartialThenComplete) {
  const auto R = ring("x,y");
  const auto A = makeSubring(Ps(R, "x+y, x*y, x*y^2"));
  const auto f = P(R, "x*y^3+x*y^4+x*y^5+x*y^6");
  EXPECT_EQ(normalForm(f, sagbi::sagbi(A, limit(5))), P(R, "x*y^6+x*y^5"));
  EXPECT_TRUE(normalForm(f, sagbi::sagbi(A, limit(7))).isZero());
}

TEST(NormalForm, GeneratorIsZero) {
  const auto R = ring("x,y");
  const auto A = makeSubring(Ps(R, "x^2-y, x*y+y^3"));
  EXPECT_TRUE(normalForm(P(R, "x*y+y^3"), A).isZero());
}

TEST(QuotientCoefficients, PowerSumInElementarySymmetric) {
  const auto R = ring("x_1..x_3");
  const auto power = makeSubring(Ps(R, "x_1+x_2+x_3, x_1^2+x_2^2+x_3^2, x_1^3+x_2^3+x_3^3"));
  const auto sb = sagbi::sagbi(power);
  const auto A = makeSubring(sb.generators(), "g");
  const auto q = quotientCoefficients(P(R, "x_1^4+x_2^4+x_3^4"), A);
  EXPECT_EQ(str(q), "g_1^4-4*g_1^2*g_2+2*g_2^2+4*g_1*g_3");
  EXPECT_EQ(evaluateMap(q, A.generators()), P(R, "x_1^4+x_2^4+x_3^4"));
}

TEST(QuotientCoefficients, GeneratorMapsToVariable) {
  const auto R = ring("x,y");
  const auto A = makeSubring(Ps(R, "x+y, x*y"), "g");
  const auto q = quotientCoefficients(P(R, "x+y"), A);
  EXPECT_EQ(str(q), "g_1");
}

TEST(QuotientCoefficients, NothingInSubring) {
  const auto R = ring("x");
  const auto A = makeSubring(Ps(R, "x^2"));
  EXPECT_TRUE(quotientCoefficients(P(R, "x"), A).isZero());
  EXPECT_EQ(normalForm(P(R, "x"), A), P(R, "x"));
  EXPECT_EQ(str(quotientCoefficients(P(R, "x+3"), A)), "3");
}

TEST(GroebnerMembershipTest, Examples) {
  const auto R = ring("x,y");
  EXPECT_TRUE(groebnerMembershipTest(P(R, "x*y^3+x*y^4+x*y^5+x*y^6"), makeSubring(Ps(R, "x+y, x*y, x*y^2"))));
  const auto X = ring("x");
  EXPECT_FALSE(groebnerMembershipTest(P(X, "x"), makeSubring(Ps(X, "x^2"))));
  EXPECT_TRUE(groebnerMembershipTest(P(X, "5"), makeSubring(Ps(X, "x^2"))));
}

TEST(SubringIntersection, QuotientRingExample) {
  const auto R = ring("x,y");
  const auto S = quotientRing(R, Ps(R, "x^3+x*y^2+y^3"));
  const auto is = subringIntersection(makeSubring(Ps(S, "x^2, x*y")), makeSubring(Ps(S, "x, y^2")));
  EXPECT_EQ(monicSet(is.subring.generators()), monicSet(Ps(S, "x^2, x^2*y^2+x*y^3, y^4, x*y^3, y^6, x*y^5")));
  EXPECT_TRUE(isFullIntersection(is));
}

TEST(SubringIntersection, SelfIntersection) {
  const auto R = ring("x,y");
  const auto A = makeSubring(Ps(R, "x+y, x*y"));
  const auto is = subringIntersection(A, A);
  EXPECT_TRUE(isFullIntersection(is));
  const auto C = is.subring;
  for (const auto& g : C.generators()) EXPECT_TRUE(groebnerMembershipTest(g, A)) << str(g);
  for (const auto& g : A.generators()) EXPECT_TRUE(subduct(C.generators(), g).isZero()) << str(g);
}

TEST(SubringIntersection, DisjointVariables) {
  const auto R = ring("x,y");
  const auto is = subringIntersection(makeSubring(Ps(R, "x")), makeSubring(Ps(R, "y")));
  EXPECT_EQ(is.subring.numGenerators(), 0u);
}

TEST(SubringIntersection, SmallLimitNotCertified) {
  const auto R = ring("x,y");
  const auto S = quotientRing(R, Ps(R, "x^3+x*y^2+y^3"));
  const auto is = subringIntersection(makeSubring(Ps(S, "x^2, x*y")), makeSubring(Ps(S, "x, y^2")), limit(2));
  EXPECT_FALSE(isFullIntersection(is));
}

TEST(SubringIntersection, RingMismatch) {
  const auto R = ring("x,y");
  const auto T = ring("x,y");
  EXPECT_EQ(kindOf([&] { (void)subringIntersection(makeSubring(Ps(R, "x")), makeSubring(Ps(T, "y"))); }),
            ErrorKind::RingMismatch);
}
