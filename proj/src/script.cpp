#include "sagbi/script.hpp"

#include <cctype>
#include <charconv>
#include <set>

#include "sagbi/error.hpp"

namespace sagbi {

namespace {

struct Keyword {
  StatementKind kind;
  std::string_view word;
};

constexpr Keyword kKeywords[] = {
    {StatementKind::Ring, "ring"},
    {StatementKind::Subring, "subring"},
    {StatementKind::Sagbi, "sagbi"},
    {StatementKind::Check, "check"},
    {StatementKind::Subduct, "subduct"},
    {StatementKind::Member, "member"},
    {StatementKind::NormalForm, "normalform"},
    {StatementKind::Quotient, "quotient"},
    {StatementKind::Gens, "gens"},
    {StatementKind::Intersect, "intersect"},
    {StatementKind::FullIntersection, "fullintersection"},
    {StatementKind::Save, "save"},
    {StatementKind::Load, "load"},
    {StatementKind::Select, "select"},
};

bool isSpace(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool isNameChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::string trim(std::string_view s) {
  while (!s.empty() && isSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && isSpace(s.back())) s.remove_suffix(1);
  return std::string(s);
}

[[noreturn]] void parseError(int line, const std::string& what) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

bool parseBool(std::string_view v, bool& out) {
  if (v == "true") out = true;
  else if (v == "false") out = false;
  else return false;
  return true;
}

class StatementReader {
 public:
  StatementReader(std::string_view text, int line) : text_(text), line_(line) {}

  void skip() {
    while (pos_ < text_.size() && isSpace(text_[pos_])) ++pos_;
  }

  bool atEnd() {
    skip();
    return pos_ == text_.size();
  }

  std::string name(const char* what) {
    skip();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      while (pos_ < text_.size() && isNameChar(text_[pos_])) ++pos_;
    }
    if (start == pos_) parseError(line_, std::string("expected ") + what);
    return std::string(text_.substr(start, pos_ - start));
  }

  bool acceptWord(std::string_view w) {
    skip();
    if (text_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    if (end < text_.size() && isNameChar(text_[end])) return false;
    pos_ = end;
    return true;
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
    if (!accept(c)) parseError(line_, std::string("expected '") + c + "'");
  }

  std::string rest() {
    std::string r = trim(text_.substr(pos_));
    pos_ = text_.size();
    return r;
  }

  /// Text up to the standalone word `w` at parenthesis depth zero (or the end).
  std::string until(std::string_view w, bool& found) {
    int depth = 0;
    for (std::size_t i = pos_; i < text_.size(); ++i) {
      const char c = text_[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth != 0 || text_.substr(i, w.size()) != w) continue;
      const bool leftOk = i == 0 || !isNameChar(text_[i - 1]);
      const bool rightOk = i + w.size() >= text_.size() || !isNameChar(text_[i + w.size()]);
      if (leftOk && rightOk) {
        std::string out = trim(text_.substr(pos_, i - pos_));
        pos_ = i + w.size();
        found = true;
        return out;
      }
    }
    found = false;
    return rest();
  }

  void options(Statement& st) {
    while (!atEnd()) {
      const std::string key = name("an option");
      expect('=');
      skip();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && !isSpace(text_[pos_])) ++pos_;
      if (start == pos_) parseError(line_, "missing value for option '" + key + "'");
      st.options.emplace_back(key, std::string(text_.substr(start, pos_ - start)));
    }
  }

 private:
  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

Statement parseStatement(std::string_view text, int line) {
  StatementReader r(text, line);
  const std::string keyword = r.name("a statement keyword");
  const Keyword* kw = nullptr;
  for (const auto& k : kKeywords) {
    if (k.word == keyword) kw = &k;
  }
  if (!kw) parseError(line, "unknown statement '" + keyword + "'");
  Statement st{kw->kind, line, {}, {}, {}};
  bool found = false;
  switch (kw->kind) {
    case StatementKind::Ring: {
      st.name = r.name("a ring name");
      if (!r.acceptWord("vars")) parseError(line, "expected 'vars'");
      std::string vars = r.until("order", found);
      if (!found) parseError(line, "expected 'order'");
      std::string order = r.until("quotient", found);
      std::string quotient = found ? r.rest() : std::string();
      if (vars.empty()) parseError(line, "empty variable list");
      if (order.empty()) parseError(line, "empty monomial order");
      if (found && quotient.empty()) parseError(line, "empty quotient list");
      st.args = {std::move(vars), std::move(order), std::move(quotient)};
      break;
    }
    case StatementKind::Subring: {
      st.name = r.name("a subring name");
      std::string symbol = "p";
      if (r.acceptWord("symbol")) symbol = r.name("a generator symbol");
      r.expect('=');
      std::string gens = r.rest();
      if (gens.empty()) parseError(line, "subring needs generators");
      st.args = {std::move(symbol), std::move(gens)};
      break;
    }
    case StatementKind::Sagbi:
      st.name = r.name("a subring name");
      r.options(st);
      break;
    case StatementKind::Check:
    case StatementKind::Gens:
    case StatementKind::FullIntersection:
      st.name = r.name("a name");
      break;
    case StatementKind::Subduct:
    case StatementKind::Member:
    case StatementKind::NormalForm:
    case StatementKind::Quotient: {
      st.name = r.name("a subring name");
      std::string poly = r.rest();
      if (poly.empty()) parseError(line, "expected a polynomial");
      st.args = {std::move(poly)};
      break;
    }
    case StatementKind::Intersect: {
      st.name = r.name("a result name");
      r.expect('=');
      std::string a = r.name("a subring name");
      r.expect('&');
      std::string b = r.name("a subring name");
      st.args = {std::move(a), std::move(b)};
      r.options(st);
      break;
    }
    case StatementKind::Save:
    case StatementKind::Load: {
      st.name = r.name("a name");
      std::string path = r.rest();
      if (path.empty()) parseError(line, "expected a path");
      st.args = {std::move(path)};
      break;
    }
    case StatementKind::Select: {
      const std::string k = r.rest();
      const auto space = k.find_first_of(" \t\n");
      if (space == std::string::npos) parseError(line, "expected 'select <k> <name>'");
      const std::string index = k.substr(0, space);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(index.data(), index.data() + index.size(), value);
      if (ec != std::errc() || ptr != index.data() + index.size() || value < 1) {
        parseError(line, "block index must be a positive integer");
      }
      StatementReader tail(std::string_view(k).substr(space), line);
      st.name = tail.name("a name");
      if (!tail.atEnd()) parseError(line, "unexpected text after name");
      st.args = {index};
      break;
    }
  }
  if (!r.atEnd()) parseError(line, "unexpected text '" + r.rest() + "'");
  if (kw->kind == StatementKind::Sagbi || kw->kind == StatementKind::Intersect) {
    SagbiOptions probe;
    for (const auto& [k, v] : st.options) {
      try {
        applyOption(probe, k, v);
      } catch (const Error& e) {
        parseError(line, e.what());
      }
    }
  }
  return st;
}

}  // namespace

std::string_view statementKeyword(StatementKind kind) {
  for (const auto& k : kKeywords) {
    if (k.kind == kind) return k.word;
  }
  return "?";
}

void applyOption(SagbiOptions& options, std::string_view key, std::string_view value) {
  const std::string k(key);
  auto boolean = [&](bool& field) {
    if (!parseBool(value, field)) fail(ErrorKind::Parse, "option " + k + " expects true or false");
  };
  if (key == "limit" || key == "printlevel") {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size() || v < (key == "limit" ? 1 : 0)) {
      fail(ErrorKind::Parse, "option " + k + " expects a " + (key == "limit" ? "positive" : "non-negative") +
                                 " integer");
    }
    if (key == "limit") options.limit = v;
    else options.printLevel = v;
  } else if (key == "strategy") {
    auto s = parseStrategy(value);
    if (!s) fail(ErrorKind::Parse, "unknown strategy '" + std::string(value) + "'");
    options.strategy = *s;
  } else if (key == "subductionmethod") {
    auto m = parseSubductionMethod(value);
    if (!m) fail(ErrorKind::Parse, "unknown subduction method '" + std::string(value) + "'");
    options.subductionMethod = *m;
  } else if (key == "autosubduce") {
    boolean(options.autoSubduce);
  } else if (key == "autosubducepartial") {
    boolean(options.autoSubduceOnPartialCompletion);
  } else if (key == "recompute") {
    boolean(options.recompute);
  } else if (key == "renew") {
    boolean(options.renewOptions);
  } else {
    fail(ErrorKind::Parse, "unknown option '" + k + "'");
  }
}

Script parseScript(std::string_view text, const std::vector<std::string>& predeclared) {
  Script script;
  std::set<std::string> rings;
  std::set<std::string> objects(predeclared.begin(), predeclared.end());
  bool haveRing = !predeclared.empty();

  std::string current;
  int line = 1;
  int startLine = 0;
  bool inComment = false;
  auto require = [&](const Statement& st, const std::string& name) {
    if (!objects.count(name)) {
      fail(ErrorKind::Reference, "line " + std::to_string(st.line) + ": '" + name + "' is not declared");
    }
  };
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : '\n';
    if (inComment) {
      if (c == '\n') {
        inComment = false;
        ++line;
        current += ' ';
      }
      continue;
    }
    if (c == '#') {
      inComment = true;
      continue;
    }
    if (c != ';') {
      if (!isSpace(c) && startLine == 0) startLine = line;
      current += c == '\n' ? ' ' : c;
      if (c == '\n' && i < text.size()) ++line;
      continue;
    }
    if (startLine == 0) parseError(line, "empty statement");
    Statement st = parseStatement(current, startLine);
    switch (st.kind) {
      case StatementKind::Ring:
        rings.insert(st.name);
        haveRing = true;
        break;
      case StatementKind::Subring:
        if (!haveRing) fail(ErrorKind::Reference, "line " + std::to_string(st.line) + ": no ring declared");
        objects.insert(st.name);
        break;
      case StatementKind::Intersect:
        require(st, st.args[0]);
        require(st, st.args[1]);
        objects.insert(st.name);
        break;
      case StatementKind::Load:
        objects.insert(st.name);
        haveRing = true;
        break;
      default:
        require(st, st.name);
        break;
    }
    script.statements.push_back(std::move(st));
    current.clear();
    startLine = 0;
  }
  if (startLine != 0) parseError(startLine, "missing ';' at end of statement");
  return script;
}

}  // namespace sagbi
