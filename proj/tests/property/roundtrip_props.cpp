#include <gtest/gtest.h>

#include "sagbi/script.hpp"
#include "sagbi/state.hpp"
#include "sagbi/subalgebra.hpp"
#include "support/test_util.hpp"

using namespace sagbi;
using namespace sagbi::test;

namespace {

constexpr int kCases = 200;

const char* kVariableSets[] = {"x,y,z", "x_1..x_4", "a,b,c,d", "t,w_1,w_2,v"};

MonomialOrder randomOrder(Rng& rng, std::size_t nvars, int depth = 0) {
  const int pick = rng.uniform(0, depth > 0 ? 1 : 4);
  switch (pick) {
    case 0: return MonomialOrder::lex();
    case 1: return MonomialOrder::grevlex();
    case 2: {
      std::vector<std::int64_t> w(nvars);
      for (auto& x : w) x = rng.uniform(0, 40);
      return MonomialOrder::weights(w, randomOrder(rng, nvars, depth + 1));
    }
    case 3: return MonomialOrder::eliminate(rng.uniform(1, static_cast<int>(nvars) - 1), randomOrder(rng, nvars, depth + 1));
    default: {
      const std::size_t first = rng.uniform(1, static_cast<int>(nvars) - 1);
      return MonomialOrder::blocks(
          {{first, randomOrder(rng, first, depth + 1)}, {nvars - first, randomOrder(rng, nvars - first, depth + 1)}});
    }
  }
}

}  // namespace

TEST(RoundTripProperties, PolynomialPrintParse) {
  Rng rng(71);
  for (int c = 0; c < kCases; ++c) {
    const auto vars = parseVariableList(kVariableSets[rng.uniform(0, 3)]);
    const auto R = PolyRing::make(vars, randomOrder(rng, vars.size()));
    const auto f = rng.polynomial(R, rng.uniform(0, 6), 5, 50);
    const auto text = str(f);
    SCOPED_TRACE(text);
    ASSERT_EQ(parsePolynomial(text, R), f);
    ASSERT_EQ(str(parsePolynomial(text, R)), text);
  }
}

TEST(RoundTripProperties, OrderPrintParse) {
  Rng rng(72);
  for (int c = 0; c < kCases; ++c) {
    const auto order = randomOrder(rng, rng.uniform(2, 6));
    SCOPED_TRACE(order.toString());
    ASSERT_EQ(parseOrder(order.toString()), order);
  }
}

TEST(RoundTripProperties, StateFile) {
  Rng rng(73);
  for (int c = 0; c < kCases / 2; ++c) {
    const auto vars = parseVariableList(kVariableSets[rng.uniform(0, 3)]);
    RingPtr R = PolyRing::make(vars, rng.coin() ? MonomialOrder::grevlex() : MonomialOrder::lex());
    if (rng.uniform(0, 3) == 0) {
      const auto rel = rng.homogeneous(R, 3, 2) + Polynomial::monomial(R, Monomial::unit(vars.size(), 0, 3));
      if (!rel.isZero()) R = quotientRing(R, {rel});
    }
    std::vector<Polynomial> gens;
    while (gens.size() < 2) {
      auto g = rng.polynomial(R, rng.uniform(1, 3), 2);
      if (!g.isConstant()) gens.push_back(g);
    }
    SagbiOptions o;
    o.limit = rng.uniform(1, 5);
    o.strategy = static_cast<Strategy>(rng.uniform(0, 2));
    o.subductionMethod = static_cast<SubductionMethod>(rng.uniform(0, 1));
    o.autoSubduce = rng.coin();
    o.autoSubduceOnPartialCompletion = rng.coin();
    const auto sb = sagbi::sagbi(makeSubring(gens, rng.coin() ? "p" : "g"), o);
    const auto text = serializeState(sb, "S" + std::to_string(c), "R");
    SCOPED_TRACE(text);
    const auto loaded = parseState(text);
    ASSERT_EQ(loaded.name, "S" + std::to_string(c));
    ASSERT_EQ(loaded.ringName, "R");
    ASSERT_EQ(serializeState(loaded.basis, loaded.name, loaded.ringName), text);
    ASSERT_EQ(loaded.basis.options(), sb.options());
    ASSERT_EQ(loaded.basis.complete(), sb.complete());
    ASSERT_EQ(loaded.basis.processedDegree(), sb.processedDegree());
    ASSERT_TRUE(loaded.basis.ring()->equivalent(*sb.ring()));
  }
}

TEST(RoundTripProperties, ScriptStatements) {
  Rng rng(74);
  const char* kOptions[] = {"limit=7", "strategy=incremental", "subductionmethod=engine", "autosubduce=false",
                            "printlevel=1", "recompute=true"};
  for (int c = 0; c < kCases; ++c) {
    std::string text = "ring R vars x, y order " + randomOrder(rng, 2).toString() + ";\n";
    std::vector<std::pair<StatementKind, std::string>> expected{{StatementKind::Ring, "R"}};
    const int n = rng.uniform(1, 8);
    text += "subring A = x+y, x*y;\n";
    expected.emplace_back(StatementKind::Subring, "A");
    for (int i = 0; i < n; ++i) {
      switch (rng.uniform(0, 5)) {
        case 0: {
          text += "sagbi A";
          for (int k = rng.uniform(0, 3); k > 0; --k) text += std::string(" ") + kOptions[rng.uniform(0, 5)];
          text += ";\n";
          expected.emplace_back(StatementKind::Sagbi, "A");
          break;
        }
        case 1:
          text += "check A;  # comment\n";
          expected.emplace_back(StatementKind::Check, "A");
          break;
        case 2:
          text += "subduct A\n  x^2*y + (x-y)^3;\n";
          expected.emplace_back(StatementKind::Subduct, "A");
          break;
        case 3:
          text += "member A x^2+y^2;\n";
          expected.emplace_back(StatementKind::Member, "A");
          break;
        case 4:
          text += "subring B symbol g = x^2, y;\n";
          expected.emplace_back(StatementKind::Subring, "B");
          break;
        default:
          text += "gens A;\n";
          expected.emplace_back(StatementKind::Gens, "A");
          break;
      }
    }
    SCOPED_TRACE(text);
    const auto script = parseScript(text);
    ASSERT_EQ(script.statements.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      ASSERT_EQ(script.statements[i].kind, expected[i].first);
      ASSERT_EQ(script.statements[i].name, expected[i].second);
    }
  }
}
