#include "sagbi/state.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "sagbi/error.hpp"
#include "sagbi/format.hpp"
#include "sagbi/groebner.hpp"
#include "sagbi/parser.hpp"

namespace sagbi {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

const char* boolText(bool b) { return b ? "true" : "false"; }

bool parseBool(const std::string& key, std::string_view v) {
  if (v == "true") return true;
  if (v == "false") return false;
  fail(ErrorKind::StateFormat, key + ": expected true or false");
}

std::int64_t parseInt(const std::string& key, std::string_view v) {
  std::int64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) fail(ErrorKind::StateFormat, key + ": expected an integer");
  return out;
}

std::string joinNames(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  return out;
}

bool sameRing(const PolyRing& r, const std::vector<std::string>& vars, const MonomialOrder& order,
              const std::vector<std::string>& quotient) {
  const PolyRing& base = r.isQuotient() ? *r.base() : r;
  if (base.variableNames() != vars || base.order().toString() != order.toString()) return false;
  if (r.quotientIdeal().size() != quotient.size()) return false;
  for (std::size_t i = 0; i < quotient.size(); ++i) {
    if (formatPolynomial(r.quotientIdeal()[i]) != quotient[i]) return false;
  }
  return true;
}

}  // namespace

StateFields stateFields(const SagbiBasis& sb, std::string_view name, std::string_view ringName) {
  StateFields f;
  const RingPtr& ring = sb.ring();
  const PolyRing& base = ring->isQuotient() ? *ring->base() : *ring;
  f.emplace_back("format_version", std::to_string(kStateFormatVersion));
  if (!name.empty()) f.emplace_back("name", std::string(name));
  if (!ringName.empty()) f.emplace_back("ring.name", std::string(ringName));
  f.emplace_back("ring.vars", joinNames(base.variableNames()));
  f.emplace_back("ring.order", base.order().toString());
  for (const auto& q : ring->quotientIdeal()) f.emplace_back("ring.quotient", formatPolynomial(q));
  const Subring sub = sb.subring();
  f.emplace_back("subring.symbol", sub.generatorSymbol());
  for (const auto& g : sub.generators()) f.emplace_back("subring.gen", formatPolynomial(g));
  for (const auto& g : sb.generators()) f.emplace_back("sagbi.gen", formatPolynomial(g));
  f.emplace_back("processed_degree", std::to_string(sb.processedDegree()));
  f.emplace_back("complete", boolText(sb.complete()));
  f.emplace_back("last_round_added", std::to_string(sb.lastRoundAdded()));
  const SagbiOptions& o = sb.options();
  f.emplace_back("options.limit", std::to_string(o.limit));
  f.emplace_back("options.strategy", std::string(strategyName(o.strategy)));
  f.emplace_back("options.subduction_method", std::string(subductionMethodName(o.subductionMethod)));
  f.emplace_back("options.auto_subduce", boolText(o.autoSubduce));
  f.emplace_back("options.auto_subduce_on_partial_completion", boolText(o.autoSubduceOnPartialCompletion));
  f.emplace_back("options.print_level", std::to_string(o.printLevel));
  f.emplace_back("options.recompute", boolText(o.recompute));
  f.emplace_back("options.renew_options", boolText(o.renewOptions));
  return f;
}

std::string serializeState(const SagbiBasis& sb, std::string_view name, std::string_view ringName) {
  std::string out;
  for (const auto& [k, v] : stateFields(sb, name, ringName)) out += k + " = " + v + "\n";
  return out;
}

LoadedState parseState(std::string_view text, const RingPtr& ringHint) {
  std::map<std::string, std::string> single;
  std::vector<std::string> quotient, subGens, sagbiGens;
  static const std::vector<std::string> singleKeys = {
      "format_version", "name", "ring.name", "ring.vars", "ring.order", "subring.symbol", "processed_degree",
      "complete", "last_round_added", "options.limit", "options.strategy", "options.subduction_method", "options.auto_subduce",
      "options.auto_subduce_on_partial_completion", "options.print_level", "options.recompute",
      "options.renew_options"};
  std::size_t lineNo = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineNo;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      fail(ErrorKind::StateFormat, "line " + std::to_string(lineNo) + ": expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key == "ring.quotient") quotient.push_back(value);
    else if (key == "subring.gen") subGens.push_back(value);
    else if (key == "sagbi.gen") sagbiGens.push_back(value);
    else if (std::find(singleKeys.begin(), singleKeys.end(), key) != singleKeys.end()) {
      if (!single.emplace(key, value).second) {
        fail(ErrorKind::StateFormat, "line " + std::to_string(lineNo) + ": duplicate key " + key);
      }
    } else {
      fail(ErrorKind::StateFormat, "line " + std::to_string(lineNo) + ": unknown key " + key);
    }
  }

  auto need = [&](const std::string& key) -> const std::string& {
    auto it = single.find(key);
    if (it == single.end()) fail(ErrorKind::StateFormat, "missing key " + key);
    return it->second;
  };
  auto optional = [&](const std::string& key, const std::string& fallback) {
    auto it = single.find(key);
    return it == single.end() ? fallback : it->second;
  };

  const std::int64_t version = parseInt("format_version", need("format_version"));
  if (version != kStateFormatVersion) {
    fail(ErrorKind::StateFormat, "unsupported format_version " + std::to_string(version));
  }

  RingPtr ring;
  try {
    const auto vars = parseVariableList(need("ring.vars"));
    const MonomialOrder order = parseOrder(need("ring.order"));
    if (ringHint && sameRing(*ringHint, vars, order, quotient)) {
      ring = ringHint;
    } else {
      ring = PolyRing::make(vars, order);
      if (!quotient.empty()) {
        std::vector<Polynomial> ideal;
        for (const auto& q : quotient) ideal.push_back(parsePolynomial(q, ring));
        ring = quotientRing(ring, std::move(ideal));
      }
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::StateFormat) throw;
    fail(ErrorKind::StateFormat, std::string("ring: ") + e.what());
  }

  auto parseGens = [&](const std::vector<std::string>& texts, const char* what) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) {
      try {
        out.push_back(parsePolynomial(t, ring));
      } catch (const Error& e) {
        fail(ErrorKind::StateFormat, std::string(what) + ": " + e.what());
      }
    }
    return out;
  };
  const auto subringGens = parseGens(subGens, "subring.gen");
  auto basisGens = parseGens(sagbiGens, "sagbi.gen");
  if (subringGens.empty()) fail(ErrorKind::StateFormat, "state has no subring generators");

  SagbiOptions o;
  o.limit = parseInt("options.limit", need("options.limit"));
  auto strategy = parseStrategy(optional("options.strategy", "master"));
  if (!strategy) fail(ErrorKind::StateFormat, "options.strategy: unknown strategy");
  o.strategy = *strategy;
  auto method = parseSubductionMethod(optional("options.subduction_method", "top"));
  if (!method) fail(ErrorKind::StateFormat, "options.subduction_method: unknown method");
  o.subductionMethod = *method;
  o.autoSubduce = parseBool("options.auto_subduce", optional("options.auto_subduce", "true"));
  o.autoSubduceOnPartialCompletion = parseBool("options.auto_subduce_on_partial_completion",
                                               optional("options.auto_subduce_on_partial_completion", "false"));
  o.printLevel = static_cast<int>(parseInt("options.print_level", optional("options.print_level", "0")));
  o.recompute = parseBool("options.recompute", optional("options.recompute", "false"));
  o.renewOptions = parseBool("options.renew_options", optional("options.renew_options", "false"));

  const Subring subring = makeSubring(subringGens, optional("subring.symbol", "p"));
  const std::int64_t pd = parseInt("processed_degree", need("processed_degree"));
  const bool complete = parseBool("complete", need("complete"));
  try {
    o.validate();
  } catch (const Error& e) {
    fail(ErrorKind::StateFormat, e.what());
  }
  const std::int64_t lastRound = parseInt("last_round_added", optional("last_round_added", "0"));
  if (lastRound < 0) fail(ErrorKind::StateFormat, "last_round_added: must be non-negative");
  SagbiBasis sb = SagbiBasis::restore(subring, std::move(basisGens), pd, complete, o, static_cast<std::size_t>(lastRound));
  return {optional("name", ""), optional("ring.name", ""), std::move(sb)};
}

void saveState(const SagbiBasis& sb, const std::filesystem::path& path, std::string_view name,
               std::string_view ringName) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Io, "cannot write " + path.string());
  out << serializeState(sb, name, ringName);
  if (!out) fail(ErrorKind::Io, "write failed for " + path.string());
}

LoadedState loadState(const std::filesystem::path& path, const RingPtr& ring) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseState(buf.str(), ring);
}

}  // namespace sagbi
