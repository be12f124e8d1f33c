// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sagbi/membership.hpp"
#include "sagbi/subalgebra.hpp"
#include "support/test_util.hpp"

using namespace sagbi;
using namespace sagbi::test;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int number;
  std::string title;
  double budgetSeconds;
  std::function<Outcome()> run;
};

SagbiOptions limit(int d) {
  SagbiOptions o;
  o.limit = d;
  return o;
}

std::string join(const std::vector<Polynomial>& polys) {
  std::string s = "|";
  for (const auto& p : polys) s += " " + str(p);
  return s + " |";
}

Outcome powerSums() {
  Outcome r;
  const auto R = ring("x_1..x_3");
  const auto A = makeSubring(Ps(R, "x_1+x_2+x_3, x_1^2+x_2^2+x_3^2, x_1^3+x_2^3+x_3^3"));
  const auto sb = sagbi::sagbi(A);
  r.require(sb.complete(), "basis not complete");
  r.require(sb.generators().size() == 3, "expected 3 generators, got " + join(sb.generators()));
  r.require(leadSet(sb.generators()) == std::set<std::string>{"x_1", "x_1*x_2", "x_1*x_2*x_3"},
            "lead monomials differ");
  r.require(isSAGBI(sb), "isSAGBI false");
  const auto f = P(R, "x_1^4+x_2^4+x_3^4");
  const auto G = makeSubring(sb.generators(), "g");
  r.require(normalForm(f, G).isZero(), "f % A nonzero");
  const auto q = quotientCoefficients(f, G);
  r.require(q == P(q.ring(), "g_1^4-4*g_1^2*g_2+2*g_2^2+4*g_1*g_3"), "f // A = " + str(q));
  return r;
}

Outcome infiniteBasis() {
  Outcome r;
  const auto R = ring("x_1,x_2");
  const auto sb = sagbi::sagbi(Ps(R, "x_1+x_2, x_1*x_2, x_1*x_2^2"), limit(7));
  r.require(monicSet(sb.generators()) ==
                monicSet(Ps(R, "x_1+x_2, x_1*x_2, x_1*x_2^2, x_1*x_2^3, x_1*x_2^4, x_1*x_2^5, x_1*x_2^6")),
            "generators " + join(sb.generators()));
  r.require(sb.generators().size() == 7, "expected 7 generators");
  r.require(!isSAGBI(sb), "isSAGBI true on the partial basis");
  return r;
}

Outcome quotientRingExample() {
  Outcome r;
  const auto L = ring("a,b,c,d,u_1..u_3,v_1..v_3", "lex");
  const auto S = quotientRing(L, Ps(L, "a*d-b*c-1"));
  const auto sb = sagbi::sagbi(Ps(S, "a*u_1+b*v_1, c*u_1+d*v_1, a*u_2+b*v_2, c*u_2+d*v_2, a*u_3+b*v_3, c*u_3+d*v_3"));
  const auto expected = Ps(S,
                           "c*u_3+d*v_3, c*u_2+d*v_2, c*u_1+d*v_1, a*u_3+b*v_3, a*u_2+b*v_2, a*u_1+b*v_1, "
                           "u_2*v_3-u_3*v_2, u_1*v_3-u_3*v_1, u_1*v_2-u_2*v_1");
  r.require(monicSet(sb.generators()) == monicSet(expected), "generators " + join(sb.generators()));
  r.require(sb.generators().size() == 9, "expected 9 generators");
  r.require(sb.complete() && isSAGBI(sb), "not certified");
  return r;
}

Outcome resume() {
  Outcome r;
  const auto R = ring("x,y");
  const auto gens = Ps(R, "x+y, x^6, y^6");
  const auto partial = sagbi::sagbi(makeSubring(gens), limit(5));
  r.require(!partial.complete(), "limit-5 object already complete");
  const auto resumed = sagbi::sagbi(partial, limit(100));
  const auto fresh = sagbi::sagbi(makeSubring(gens), limit(100));
  r.require(resumed.complete() && isSAGBI(resumed), "resumed basis not certified");
  r.require(resumed.generators().size() == 3, "expected 3 generators, got " + join(resumed.generators()));
  r.require(leadSet(resumed.generators()) == std::set<std::string>{"x", "y^6", "x^5*y"}, "lead monomials differ");
  r.require(monicSet(resumed.generators()).count(
                str(P(R, "6*x^5*y+15*x^4*y^2+20*x^3*y^3+15*x^2*y^4+6*x*y^5").monic())) == 1,
            "third generator differs: " + join(resumed.generators()));
  r.require(join(resumed.generators()) == join(fresh.generators()) && resumed.complete() == fresh.complete(),
            "resumed " + join(resumed.generators()) + " differs from fresh " + join(fresh.generators()));
  return r;
}

Outcome subduction() {
  Outcome r;
  const auto R = ring("x,y");
  const auto out = subduct(Ps(R, "x^2+x, y^2+1"), P(R, "x^2*y^2+x^3*y"));
  r.require(out == P(R, "x^3*y-x*y^2"), "got " + str(out));
  return r;
}

Outcome partialNormalForm() {
  Outcome r;
  const auto R = ring("x,y");
  const auto A = makeSubring(Ps(R, "x+y, x*y, x*y^2"));
  const auto f = P(R, "x*y^3+x*y^4+x*y^5+x*y^6");
  const auto r5 = normalForm(f, sagbi::sagbi(A, limit(5)));
  r.require(r5 == P(R, "x*y^6+x*y^5"), "limit 5 remainder " + str(r5));
  const auto r7 = normalForm(f, sagbi::sagbi(A, limit(7)));
  r.require(r7.isZero(), "limit 7 remainder " + str(r7));
  r.require(groebnerMembershipTest(f, A), "membership test false");
  return r;
}

Outcome intersection() {
  Outcome r;
  const auto R = ring("x,y");
  const auto S = quotientRing(R, Ps(R, "x^3+x*y^2+y^3"));
  const auto is = subringIntersection(makeSubring(Ps(S, "x^2, x*y")), makeSubring(Ps(S, "x, y^2")));
  r.require(monicSet(is.subring.generators()) == monicSet(Ps(S, "x^2, x^2*y^2+x*y^3, y^4, x*y^3, y^6, x*y^5")),
            "generators " + join(is.subring.generators()));
  r.require(isFullIntersection(is), "not a full intersection");
  return r;
}

Outcome screws() {
  Outcome r;
  const auto R = ring("t_1..t_3,w_1..w_3,v_1..v_3", "eliminate(3):lex");
  const auto sb = sagbi::sagbi(
      Ps(R, "w_1, w_2, w_3, -t_3*w_2+t_2*w_3+v_1, t_3*w_1-t_1*w_3+v_2, -t_2*w_1+t_1*w_2+v_3"));
  r.require(sb.complete() && isSAGBI(sb), "not certified");
  const auto inv = selectInSubring(1, sb.generators());
  r.require(monicSet(inv) == monicSet(Ps(R, "w_3, w_2, w_1, w_1*v_1+w_2*v_2+w_3*v_3")), "selected " + join(inv));
  return r;
}

Outcome coxNagata() {
  Outcome r;
  const auto R = ring("x_1..x_6 y_1..y_6");
  const auto gens = Ps(R,
                       "x_1, x_2, x_3, x_4, x_5, x_6, "
                       "y_3*x_5*x_6 + x_3*y_5*x_6 - x_3*x_5*y_6, "
                       "y_2*x_4*x_6 - x_2*y_4*x_6 + x_2*x_4*y_6, "
                       "y_1*x_4*x_5 + x_1*y_4*x_5 - x_1*x_4*y_5, "
                       "y_1*x_2*x_3 + x_1*y_2*x_3 + x_1*x_2*y_3, "
                       "y_2*x_3*x_4*x_5 + x_2*y_3*x_4*x_5 - x_2*x_3*y_4*x_5 + x_2*x_3*x_4*y_5, "
                       "y_1*x_3*x_4*x_6 + x_1*y_3*x_4*x_6 + x_1*x_3*y_4*x_6 - x_1*x_3*x_4*y_6, "
                       "y_1*x_2*x_5*x_6 + x_1*y_2*x_5*x_6 - x_1*x_2*y_5*x_6 + x_1*x_2*x_5*y_6");
  const auto A = makeSubring(gens);
  r.require(A.numGenerators() == 13, "expected 13 generators");
  r.require(isSAGBI(A), "isSAGBI false");
  const auto sb = sagbi::sagbi(A);
  r.require(sb.complete() && monicSet(sb.generators()) == monicSet(gens), "completion added generators");
  return r;
}

Outcome grassmannian() {
  Outcome r;
  std::vector<std::string> names;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 6; ++j) names.push_back("x_" + std::to_string(i) + "_" + std::to_string(j));
  }
  const auto R = PolyRing::make(
      names, MonomialOrder::weights({0, 0, 0, 0, 0, 0, 0, 15, 3, 12, 9, 6, 0, 7, 14, 21, 28, 35}));
  auto v = [&](int row, int col) { return Polynomial::variable(R, row * 6 + col); };
  std::vector<Polynomial> minors;
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      for (int c = b + 1; c < 6; ++c) {
        const int s[3] = {a, b, c};
        auto m = [&](int row, int k) { return v(row, s[k]); };
        minors.push_back(m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)));
      }
    }
  }
  SagbiOptions o = limit(100);
  o.subductionMethod = SubductionMethod::Engine;
  const auto sb = sagbi::sagbi(makeSubring(minors), o);
  r.require(sb.generators().size() == 21, "expected 21 generators, got " + std::to_string(sb.generators().size()));
  r.require(isSAGBI(sb), "not certified");
  if (sb.generators().size() >= 20) {
    const std::vector<Polynomial> first(sb.generators().begin(), sb.generators().begin() + 20);
    r.require(monicSet(first) == monicSet(minors), "the first 20 generators are not the minors");
  }
  return r;
}

Outcome propertySuites() {
  Outcome r;
  const std::string cmd = std::string("\"") + SAGBI_PROPERTY_SUITES + "\" --gtest_brief=1 > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  r.require(status == 0, "property suites failed (status " + std::to_string(status) + "), run " +
                             SAGBI_PROPERTY_SUITES + " for details");
  return r;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "power sums", 1, powerSums},
      {2, "infinite basis at limit 7", 1, infiniteBasis},
      {3, "quotient ring modulo ad-bc-1", 10, quotientRingExample},
      {4, "resume from limit 5 to 100", 5, resume},
      {5, "subduction", 0.1, subduction},
      {6, "partial-basis normal form", 1, partialNormalForm},
      {7, "intersection in a quotient ring", 10, intersection},
      {8, "screws", 30, screws},
      {9, "Cox-Nagata ring", 60, coxNagata},
      {10, "Gr(3,6) matching field", 1800, grassmannian},
      {11, "property suites", 60, propertySuites},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && seconds >= c.budgetSeconds) {
      out.ok = false;
      out.detail = "over the " + std::to_string(c.budgetSeconds) + " s budget";
    }
    failures += !out.ok;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    std::cout << (out.ok ? "PASS " : "FAIL ") << c.number << ": " << c.title << " (" << timing << ")";
    if (!out.ok) std::cout << ": " << out.detail;
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
