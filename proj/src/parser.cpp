#include "sagbi/parser.hpp"

#include <cctype>
#include <charconv>

#include "sagbi/error.hpp"

namespace sagbi {

namespace {

bool isIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '$'; }
bool isIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }

class ExprParser {
 public:
  ExprParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip();
    if (pos_ == text_.size()) error("empty expression");
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Parse, "column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!accept('^')) return base;
    skip();
    const bool negative = accept('-');
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer exponent");
    if (negative) error("negative exponent");
    unsigned k = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, k);
    if (ec != std::errc() || k > 100000) error("exponent out of range");
    return base.pow(k);
  }

  Polynomial atom() {
    skip();
    if (pos_ == text_.size()) error("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t denStart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (denStart == pos_) error("expected a denominator");
      }
      const auto literal = text_.substr(start, pos_ - start);
      try {
        return Polynomial::constant(ring_, Rational::parse(literal));
      } catch (const Error& e) {
        pos_ = start;
        error(e.what());
      }
    }
    if (isIdentStart(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && isIdentChar(text_[pos_])) ++pos_;
      const auto name = text_.substr(start, pos_ - start);
      const auto idx = ring_->variableIndex(name);
      if (!idx) {
        pos_ = start;
        error("unknown identifier '" + std::string(name) + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class OrderParser {
 public:
  explicit OrderParser(std::string_view text) : text_(text) {}

  MonomialOrder parse() {
    MonomialOrder o = order();
    skip();
    if (pos_ != text_.size()) error("trailing text in monomial order");
    return o;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Parse, "column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string w(text_.substr(start, pos_ - start));
    for (auto& ch : w) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return w;
  }

  std::int64_t integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      pos_ = start;
      error("expected an integer");
    }
    return v;
  }

  MonomialOrder tieBreak() {
    if (accept(':')) return order();
    return MonomialOrder::grevlex();
  }

  MonomialOrder order() {
    const std::size_t start = pos_;
    const std::string w = word();
    if (w == "lex") return MonomialOrder::lex();
    if (w == "grevlex") return MonomialOrder::grevlex();
    if (w == "weights") {
      expect('(');
      std::vector<std::int64_t> ws;
      if (!accept(')')) {
        do ws.push_back(integer());
        while (accept(','));
        expect(')');
      }
      for (auto x : ws) {
        if (x < 0) error("weights must be non-negative");
      }
      return MonomialOrder::weights(std::move(ws), tieBreak());
    }
    if (w == "eliminate") {
      expect('(');
      const auto k = integer();
      if (k <= 0) error("elimination count must be positive");
      expect(')');
      return MonomialOrder::eliminate(static_cast<std::size_t>(k), tieBreak());
    }
    if (w == "blocks") {
      expect('(');
      std::vector<std::pair<std::size_t, MonomialOrder>> blocks;
      do {
        const auto size = integer();
        if (size <= 0) error("block size must be positive");
        blocks.emplace_back(static_cast<std::size_t>(size), order());
      } while (accept(','));
      expect(')');
      return MonomialOrder::blocks(std::move(blocks));
    }
    pos_ = start;
    error("unknown monomial order '" + w + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parsePolynomial(std::string_view text, const RingPtr& ring) { return ExprParser(text, ring).parse(); }

std::vector<Polynomial> parsePolynomialList(std::string_view text, const RingPtr& ring) {
  std::vector<Polynomial> out;
  if (trim(text).empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(parsePolynomial(text.substr(start, i - start), ring));
      start = i + 1;
    }
  }
  return out;
}

MonomialOrder parseOrder(std::string_view text) { return OrderParser(text).parse(); }

std::vector<std::string> parseVariableList(std::string_view text) {
  std::vector<std::string> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    const auto dots = token.find("..");
    if (dots == std::string::npos) {
      for (char c : token) {
        if (!isIdentChar(c)) fail(ErrorKind::Parse, "invalid variable name '" + token + "'");
      }
      if (!isIdentStart(token.front())) fail(ErrorKind::Parse, "invalid variable name '" + token + "'");
      out.push_back(token);
    } else {
      const std::string lo = token.substr(0, dots);
      const std::string hi = token.substr(dots + 2);
      auto split = [&](const std::string& s) {
        std::size_t p = s.size();
        while (p > 0 && std::isdigit(static_cast<unsigned char>(s[p - 1]))) --p;
        if (p == s.size() || p == 0) fail(ErrorKind::Parse, "invalid variable range '" + token + "'");
        return std::pair{s.substr(0, p), std::stoi(s.substr(p))};
      };
      const auto [prefixLo, a] = split(lo);
      const auto [prefixHi, b] = split(hi);
      if (prefixLo != prefixHi || a > b) fail(ErrorKind::Parse, "invalid variable range '" + token + "'");
      for (int k = a; k <= b; ++k) out.push_back(prefixLo + std::to_string(k));
    }
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) flush();
    else token += c;
  }
  flush();
  if (out.empty()) fail(ErrorKind::Parse, "empty variable list");
  return out;
}

}  // namespace sagbi
