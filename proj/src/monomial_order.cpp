#include "sagbi/monomial_order.hpp"

#include <algorithm>
#include <sstream>

#include "sagbi/error.hpp"

namespace sagbi {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool sameTie(const std::shared_ptr<const MonomialOrder>& a,
             const std::shared_ptr<const MonomialOrder>& b) {
  if (!a || !b) return a == b;
  return *a == *b;
}

std::string tieSuffix(const std::shared_ptr<const MonomialOrder>& tie) {
  if (!tie || std::holds_alternative<MonomialOrder::GRevLex>(tie->variant())) return "";
  return ":" + tie->toString();
}

}  // namespace

MonomialOrder MonomialOrder::weights(std::vector<std::int64_t> w, MonomialOrder tieBreak) {
  return MonomialOrder(Weights{std::move(w), std::make_shared<const MonomialOrder>(std::move(tieBreak))});
}

MonomialOrder MonomialOrder::eliminate(std::size_t count, MonomialOrder tieBreak) {
  return MonomialOrder(Eliminate{count, std::make_shared<const MonomialOrder>(std::move(tieBreak))});
}

MonomialOrder MonomialOrder::blocks(std::vector<std::pair<std::size_t, MonomialOrder>> blocks) {
  Blocks b;
  for (auto& [size, order] : blocks) {
    b.blocks.emplace_back(size, std::make_shared<const MonomialOrder>(std::move(order)));
  }
  return MonomialOrder(std::move(b));
}

bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
  if (a.v_.index() != b.v_.index()) return false;
  return std::visit(
      Overloaded{
          [](const MonomialOrder::Lex&) { return true; },
          [](const MonomialOrder::GRevLex&) { return true; },
          [&](const MonomialOrder::Weights& w) {
            const auto& o = std::get<MonomialOrder::Weights>(b.v_);
            return w.weights == o.weights && sameTie(w.tieBreak, o.tieBreak);
          },
          [&](const MonomialOrder::Eliminate& e) {
            const auto& o = std::get<MonomialOrder::Eliminate>(b.v_);
            return e.count == o.count && sameTie(e.tieBreak, o.tieBreak);
          },
          [&](const MonomialOrder::Blocks& bl) {
            const auto& o = std::get<MonomialOrder::Blocks>(b.v_);
            if (bl.blocks.size() != o.blocks.size()) return false;
            for (std::size_t i = 0; i < bl.blocks.size(); ++i) {
              if (bl.blocks[i].first != o.blocks[i].first) return false;
              if (!sameTie(bl.blocks[i].second, o.blocks[i].second)) return false;
            }
            return true;
          },
      },
      a.v_);
}

std::string MonomialOrder::toString() const {
  return std::visit(
      Overloaded{
          [](const Lex&) -> std::string { return "lex"; },
          [](const GRevLex&) -> std::string { return "grevlex"; },
          [](const Weights& w) {
            std::ostringstream os;
            os << "weights(";
            for (std::size_t i = 0; i < w.weights.size(); ++i) os << (i ? "," : "") << w.weights[i];
            os << ")" << tieSuffix(w.tieBreak);
            return os.str();
          },
          [](const Eliminate& e) {
            return "eliminate(" + std::to_string(e.count) + ")" + tieSuffix(e.tieBreak);
          },
          [](const Blocks& b) {
            std::string s = "blocks(";
            for (std::size_t i = 0; i < b.blocks.size(); ++i) {
              if (i) s += ", ";
              s += std::to_string(b.blocks[i].first) + " " + b.blocks[i].second->toString();
            }
            return s + ")";
          },
      },
      v_);
}

OrderComparator::OrderComparator(const MonomialOrder& order, std::size_t nvars) : nvars_(nvars) {
  compile(order, 0, nvars);
  collectBlocks(order, 0, nvars, blocks_);
  // Globality: every variable must exceed the empty monomial.
  const Monomial one(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    if (compare(Monomial::unit(nvars, i), one) <= 0) {
      fail(ErrorKind::InvalidInput, "monomial order is not global");
    }
  }
}

void OrderComparator::compile(const MonomialOrder& order, std::size_t begin, std::size_t end) {
  const std::size_t width = end - begin;
  std::visit(
      Overloaded{
          [&](const MonomialOrder::Lex&) { steps_.push_back({Step::Kind::Lex, begin, end, {}}); },
          [&](const MonomialOrder::GRevLex&) {
            steps_.push_back({Step::Kind::Degree, begin, end, {}});
            steps_.push_back({Step::Kind::RevLex, begin, end, {}});
          },
          [&](const MonomialOrder::Weights& w) {
            if (w.weights.size() > width) {
              fail(ErrorKind::InvalidInput, "weight vector longer than the variable count");
            }
            for (std::int64_t x : w.weights) {
              if (x < 0) fail(ErrorKind::InvalidInput, "weight vectors must be non-negative");
            }
            std::vector<std::int64_t> padded = w.weights;
            padded.resize(width, 0);
            steps_.push_back({Step::Kind::Weight, begin, end, std::move(padded)});
            compile(*w.tieBreak, begin, end);
          },
          [&](const MonomialOrder::Eliminate& e) {
            if (e.count == 0 || e.count > width) {
              fail(ErrorKind::InvalidInput, "elimination block size out of range");
            }
            std::vector<std::int64_t> weights(width, 0);
            std::fill(weights.begin(), weights.begin() + static_cast<std::ptrdiff_t>(e.count), 1);
            steps_.push_back({Step::Kind::Weight, begin, end, std::move(weights)});
            compile(*e.tieBreak, begin, end);
          },
          [&](const MonomialOrder::Blocks& b) {
            std::size_t pos = begin;
            for (const auto& [size, sub] : b.blocks) {
              if (size == 0) fail(ErrorKind::InvalidInput, "empty block in block order");
              if (pos + size > end) fail(ErrorKind::InvalidInput, "block sizes exceed the variable count");
              compile(*sub, pos, pos + size);
              pos += size;
            }
            if (pos != end) fail(ErrorKind::InvalidInput, "block sizes do not cover all variables");
          },
      },
      order.variant());
}

void OrderComparator::collectBlocks(const MonomialOrder& order, std::size_t begin, std::size_t end,
                                    std::vector<std::vector<std::size_t>>& out) const {
  auto push = [&](std::vector<std::size_t> vars) {
    for (const auto& prev : out) {
      std::erase_if(vars, [&](std::size_t v) { return std::find(prev.begin(), prev.end(), v) != prev.end(); });
    }
    if (!vars.empty()) out.push_back(std::move(vars));
  };
  std::visit(
      Overloaded{
          [](const MonomialOrder::Lex&) {},
          [](const MonomialOrder::GRevLex&) {},
          [&](const MonomialOrder::Weights& w) {
            std::vector<std::size_t> vars;
            for (std::size_t i = 0; i < w.weights.size(); ++i) {
              if (w.weights[i] > 0) vars.push_back(begin + i);
            }
            push(std::move(vars));
            collectBlocks(*w.tieBreak, begin, end, out);
          },
          [&](const MonomialOrder::Eliminate& e) {
            std::vector<std::size_t> vars;
            for (std::size_t i = 0; i < e.count; ++i) vars.push_back(begin + i);
            push(std::move(vars));
            collectBlocks(*e.tieBreak, begin, end, out);
          },
          [&](const MonomialOrder::Blocks& b) {
            std::size_t pos = begin;
            for (const auto& blk : b.blocks) {
              std::vector<std::size_t> vars;
              for (std::size_t i = 0; i < blk.first; ++i) vars.push_back(pos + i);
              push(std::move(vars));
              pos += blk.first;
            }
          },
      },
      order.variant());
}

std::strong_ordering OrderComparator::compare(const Monomial& a, const Monomial& b) const {
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  for (const Step& s : steps_) {
    switch (s.kind) {
      case Step::Kind::Degree: {
        std::int64_t d = 0;
        for (std::size_t i = s.begin; i < s.end; ++i) d += ea[i] - eb[i];
        if (d != 0) return d > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
        break;
      }
      case Step::Kind::Weight: {
        std::int64_t d = 0;
        for (std::size_t i = s.begin; i < s.end; ++i) d += s.weights[i - s.begin] * (ea[i] - eb[i]);
        if (d != 0) return d > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
        break;
      }
      case Step::Kind::Lex:
        for (std::size_t i = s.begin; i < s.end; ++i) {
          if (ea[i] != eb[i]) return ea[i] > eb[i] ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        break;
      case Step::Kind::RevLex:
        for (std::size_t i = s.end; i-- > s.begin;) {
          if (ea[i] != eb[i]) return ea[i] < eb[i] ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        break;
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compareMonomials(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) fail(ErrorKind::InvalidInput, "exponent vectors of different lengths");
  return OrderComparator(order, a.size()).compare(a, b);
}

}  // namespace sagbi
