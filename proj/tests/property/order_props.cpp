#include <gtest/gtest.h>

#include <numeric>

#include "support/test_util.hpp"

using namespace sagbi;
using namespace sagbi::test;

namespace {

constexpr int kCases = 200;

// Reference comparison written directly from the order definitions.
int reference(const MonomialOrder& order, std::span<const Exponent> a, std::span<const Exponent> b) {
  auto sign = [](std::int64_t v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
  return std::visit(
      [&](const auto& o) -> int {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, MonomialOrder::Lex>) {
          for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return sign(a[i] - b[i]);
          }
          return 0;
        } else if constexpr (std::is_same_v<T, MonomialOrder::GRevLex>) {
          const auto da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
          const auto db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
          if (da != db) return sign(da - db);
          for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return sign(b[i] - a[i]);
          }
          return 0;
        } else if constexpr (std::is_same_v<T, MonomialOrder::Weights>) {
          std::int64_t wa = 0, wb = 0;
          for (std::size_t i = 0; i < o.weights.size() && i < a.size(); ++i) {
            wa += o.weights[i] * a[i];
            wb += o.weights[i] * b[i];
          }
          if (wa != wb) return sign(wa - wb);
          return reference(*o.tieBreak, a, b);
        } else if constexpr (std::is_same_v<T, MonomialOrder::Eliminate>) {
          std::int64_t ea = 0, eb = 0;
          for (std::size_t i = 0; i < o.count; ++i) {
            ea += a[i];
            eb += b[i];
          }
          if (ea != eb) return sign(ea - eb);
          return reference(*o.tieBreak, a, b);
        } else {
          std::size_t begin = 0;
          for (const auto& [size, inner] : o.blocks) {
            const int c = reference(*inner, a.subspan(begin, size), b.subspan(begin, size));
            if (c != 0) return c;
            begin += size;
          }
          return 0;
        }
      },
      order.variant());
}

int asInt(std::strong_ordering o) { return o > 0 ? 1 : (o < 0 ? -1 : 0); }

MonomialOrder randomBaseOrder(Rng& rng) { return rng.coin() ? MonomialOrder::lex() : MonomialOrder::grevlex(); }

MonomialOrder randomOrder(Rng& rng, std::size_t nvars) {
  switch (rng.uniform(0, 4)) {
    case 0: return MonomialOrder::lex();
    case 1: return MonomialOrder::grevlex();
    case 2: {
      std::vector<std::int64_t> w(nvars);
      for (auto& x : w) x = rng.uniform(0, 6);
      return MonomialOrder::weights(w, randomBaseOrder(rng));
    }
    case 3: return MonomialOrder::eliminate(rng.uniform(1, static_cast<int>(nvars) - 1), randomBaseOrder(rng));
    default: {
      const std::size_t first = rng.uniform(1, static_cast<int>(nvars) - 1);
      return MonomialOrder::blocks({{first, randomBaseOrder(rng)}, {nvars - first, randomBaseOrder(rng)}});
    }
  }
}

}  // namespace

TEST(OrderProperties, AgreesWithReferenceDefinition) {
  Rng rng(11);
  for (int c = 0; c < kCases; ++c) {
    const std::size_t n = rng.uniform(2, 5);
    const auto order = randomOrder(rng, n);
    SCOPED_TRACE(order.toString());
    for (int k = 0; k < 20; ++k) {
      const auto a = rng.monomial(n, 6);
      const auto b = rng.monomial(n, 6);
      ASSERT_EQ(asInt(compareMonomials(order, a, b)), reference(order, a.exponents(), b.exponents()));
    }
  }
}

TEST(OrderProperties, TotalAntisymmetricTransitive) {
  Rng rng(12);
  for (int c = 0; c < kCases; ++c) {
    const std::size_t n = rng.uniform(2, 5);
    const auto order = randomOrder(rng, n);
    SCOPED_TRACE(order.toString());
    const auto a = rng.monomial(n, 5);
    const auto b = rng.monomial(n, 5);
    const auto m = rng.monomial(n, 5);
    const int ab = asInt(compareMonomials(order, a, b));
    ASSERT_EQ(ab, -asInt(compareMonomials(order, b, a)));
    ASSERT_EQ(ab == 0, a == b);
    const int bm = asInt(compareMonomials(order, b, m));
    if (ab > 0 && bm > 0) ASSERT_GT(asInt(compareMonomials(order, a, m)), 0);
    if (ab < 0 && bm < 0) ASSERT_LT(asInt(compareMonomials(order, a, m)), 0);
  }
}

TEST(OrderProperties, MultiplicativeAndGlobal) {
  Rng rng(13);
  for (int c = 0; c < kCases; ++c) {
    const std::size_t n = rng.uniform(2, 5);
    const auto order = randomOrder(rng, n);
    SCOPED_TRACE(order.toString());
    const auto a = rng.monomial(n, 5);
    const auto b = rng.monomial(n, 5);
    const auto m = rng.monomial(n, 4);
    ASSERT_EQ(compareMonomials(order, a, b), compareMonomials(order, a * m, b * m));
    if (!m.isOne()) ASSERT_GT(asInt(compareMonomials(order, m, Monomial(n))), 0);
  }
}
