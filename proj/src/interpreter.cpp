#include "sagbi/interpreter.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sagbi/format.hpp"
#include "sagbi/groebner.hpp"
#include "sagbi/membership.hpp"
#include "sagbi/parser.hpp"
#include "sagbi/state.hpp"

namespace sagbi {

using nlohmann::json;

namespace {

struct Entry {
  Subring subring;
  std::string ringName;
  std::optional<SagbiBasis> basis;
  std::optional<IntersectedSubring> intersection;
};

std::string listing(const std::vector<Polynomial>& polys) {
  std::string out = "|";
  for (const auto& p : polys) out += " " + formatPolynomial(p);
  return out + " |";
}

json polyArray(const std::vector<Polynomial>& polys) {
  json a = json::array();
  for (const auto& p : polys) a.push_back(formatPolynomial(p));
  return a;
}

json stateJson(const StateFields& fields) {
  json o = json::object();
  for (const auto& [k, v] : fields) {
    if (k == "ring.quotient" || k == "subring.gen" || k == "sagbi.gen") {
      if (!o.contains(k)) o[k] = json::array();
      o[k].push_back(v);
    } else if (k == "format_version" || k == "processed_degree" || k == "last_round_added" || k == "options.limit" ||
               k == "options.print_level") {
      o[k] = std::stoll(v);
    } else if (v == "true" || v == "false") {
      o[k] = v == "true";
    } else {
      o[k] = v;
    }
  }
  for (const char* k : {"ring.quotient", "subring.gen", "sagbi.gen"}) {
    if (!o.contains(k)) o[k] = json::array();
  }
  return o;
}

std::string ringText(const PolyRing& ring) {
  const PolyRing& base = ring.isQuotient() ? *ring.base() : ring;
  std::string out = "QQ[";
  for (std::size_t i = 0; i < base.numVars(); ++i) {
    if (i) out += ", ";
    out += base.variableName(i);
  }
  out += "]";
  if (ring.isQuotient()) {
    out += "/(";
    for (std::size_t i = 0; i < ring.quotientIdeal().size(); ++i) {
      if (i) out += ", ";
      out += formatPolynomial(ring.quotientIdeal()[i]);
    }
    out += ")";
  }
  return out + ", order " + base.order().toString();
}

}  // namespace

struct Interpreter::Impl {
  std::ostream& out;
  InterpreterOptions options;
  std::map<std::string, RingPtr> rings;
  RingPtr currentRing;
  std::string currentRingName;
  std::map<std::string, Entry> objects;
  std::optional<std::string> lastBasis;
  int counter = 0;
  json results = json::array();

  Impl(std::ostream& o, InterpreterOptions opts) : out(o), options(opts) {}

  bool structured() const { return options.format == OutputFormat::Structured; }

  Entry& entry(const std::string& name) {
    auto it = objects.find(name);
    if (it == objects.end()) fail(ErrorKind::Reference, "'" + name + "' is not declared");
    return it->second;
  }

  std::string ringNameOf(const RingPtr& ring) const {
    for (const auto& [n, r] : rings) {
      if (r == ring) return n;
    }
    return "R";
  }

  void registerLoaded(LoadedState loaded, const std::string& fallbackName) {
    std::string name = loaded.name.empty() ? fallbackName : loaded.name;
    std::string ringName = loaded.ringName.empty() ? ringNameOf(loaded.basis.ring()) : loaded.ringName;
    rings[ringName] = loaded.basis.ring();
    currentRing = loaded.basis.ring();
    currentRingName = ringName;
    Subring sub = loaded.basis.subring();
    sub.offer(loaded.basis);
    objects.insert_or_assign(name, Entry{sub, ringName, std::move(loaded.basis), std::nullopt});
    lastBasis = name;
  }

  SagbiOptions optionsFor(const Statement& st) const {
    SagbiOptions o;
    o.printLevel = options.printLevel;
    for (const auto& [k, v] : st.options) applyOption(o, k, v);
    return o;
  }

  const std::vector<Polynomial>& currentGens(const Entry& e) const {
    return e.basis ? e.basis->generators() : e.subring.generators();
  }

  void emit(const Statement& st, const std::string& text, json value, const std::string& trace) {
    ++counter;
    if (structured()) {
      json r = {{"index", counter}, {"line", st.line}, {"statement", statementKeyword(st.kind)}, {"name", st.name},
                {"text", text}, {"value", std::move(value)}};
      if (!trace.empty()) {
        json lines = json::array();
        std::istringstream in(trace);
        std::string l;
        while (std::getline(in, l)) lines.push_back(l);
        r["trace"] = std::move(lines);
      }
      results.push_back(std::move(r));
    } else {
      out << trace << '[' << counter << "] " << text << '\n';
    }
  }

  json basisJson(const SagbiBasis& sb, const std::string& name, const std::string& ringName) const {
    return {{"summary", sb.summary()},
            {"complete", sb.complete()},
            {"generators", polyArray(sb.generators())},
            {"state", stateJson(stateFields(sb, name, ringName))}};
  }

  void run(const Statement& st) {
    std::ostringstream trace;
    switch (st.kind) {
      case StatementKind::Ring: {
        auto vars = parseVariableList(st.args[0]);
        RingPtr ring = PolyRing::make(std::move(vars), parseOrder(st.args[1]));
        if (!st.args[2].empty()) ring = quotientRing(ring, parsePolynomialList(st.args[2], ring));
        rings[st.name] = ring;
        currentRing = ring;
        currentRingName = st.name;
        emit(st, "ring " + st.name + " = " + ringText(*ring), ringText(*ring), {});
        break;
      }
      case StatementKind::Subring: {
        if (!currentRing) fail(ErrorKind::Reference, "no ring declared");
        auto gens = parsePolynomialList(st.args[1], currentRing);
        Subring sub = makeSubringAllowEmpty(currentRing, gens, st.args[0]);
        if (sub.numGenerators() == 0) fail(ErrorKind::InvalidInput, "generator set has no non-constant polynomial");
        objects.insert_or_assign(st.name, Entry{sub, currentRingName, std::nullopt, std::nullopt});
        const std::string text = "subring of " + currentRingName + " with " + std::to_string(sub.numGenerators()) +
                                 " generators";
        emit(st, text, polyArray(sub.generators()), {});
        break;
      }
      case StatementKind::Sagbi: {
        Entry& e = entry(st.name);
        const SagbiOptions o = optionsFor(st);
        e.basis = sagbi::sagbi(e.subring, o, &trace);
        lastBasis = st.name;
        emit(st, e.basis->summary(), basisJson(*e.basis, st.name, e.ringName), trace.str());
        break;
      }
      case StatementKind::Check: {
        Entry& e = entry(st.name);
        const bool ok = e.basis ? isSAGBI(*e.basis) : isSAGBI(e.subring);
        emit(st, ok ? "true" : "false", ok, {});
        break;
      }
      case StatementKind::Subduct: {
        Entry& e = entry(st.name);
        const Polynomial f = parsePolynomial(st.args[0], e.subring.ambientRing());
        const Polynomial r = subduct(currentGens(e), f);
        emit(st, formatPolynomial(r), formatPolynomial(r), {});
        break;
      }
      case StatementKind::NormalForm: {
        Entry& e = entry(st.name);
        const Polynomial f = parsePolynomial(st.args[0], e.subring.ambientRing());
        const Polynomial r = e.basis ? normalForm(f, *e.basis) : normalForm(f, e.subring);
        emit(st, formatPolynomial(r), formatPolynomial(r), {});
        break;
      }
      case StatementKind::Quotient: {
        Entry& e = entry(st.name);
        const Polynomial f = parsePolynomial(st.args[0], e.subring.ambientRing());
        const Polynomial q = e.basis ? quotientCoefficients(f, *e.basis) : quotientCoefficients(f, e.subring);
        emit(st, formatPolynomial(q), formatPolynomial(q), {});
        break;
      }
      case StatementKind::Member: {
        Entry& e = entry(st.name);
        const Polynomial f = parsePolynomial(st.args[0], e.subring.ambientRing());
        const bool ok = groebnerMembershipTest(f, e.subring);
        emit(st, ok ? "true" : "false", ok, {});
        break;
      }
      case StatementKind::Gens: {
        const Entry& e = entry(st.name);
        emit(st, listing(currentGens(e)), polyArray(currentGens(e)), {});
        break;
      }
      case StatementKind::Select: {
        const Entry& e = entry(st.name);
        const auto picked = selectInSubring(std::stoul(st.args[0]), currentGens(e));
        emit(st, listing(picked), polyArray(picked), {});
        break;
      }
      case StatementKind::Intersect: {
        const Entry& a = entry(st.args[0]);
        const Entry& b = entry(st.args[1]);
        const SagbiOptions o = optionsFor(st);
        IntersectedSubring is = subringIntersection(a.subring, b.subring, o, &trace);
        const std::string ringName = a.ringName;
        const std::string text = "intersection subring of " + ringName + " with " +
                                 std::to_string(is.subring.numGenerators()) + " generators";
        json value = {{"generators", polyArray(is.subring.generators())}, {"full", is.compositeCertified}};
        objects.insert_or_assign(st.name, Entry{is.subring, ringName, std::nullopt, is});
        emit(st, text, std::move(value), trace.str());
        break;
      }
      case StatementKind::FullIntersection: {
        const Entry& e = entry(st.name);
        if (!e.intersection) fail(ErrorKind::InvalidInput, "'" + st.name + "' is not an intersection");
        const bool ok = isFullIntersection(*e.intersection);
        emit(st, ok ? "true" : "false", ok, {});
        break;
      }
      case StatementKind::Save: {
        const Entry& e = entry(st.name);
        auto cached = e.subring.cachedBasis();
        const SagbiBasis* sb = e.basis ? &*e.basis : cached.get();
        if (!sb) fail(ErrorKind::InvalidInput, "'" + st.name + "' has no computation object; run sagbi first");
        sagbi::saveState(*sb, st.args[0], st.name, e.ringName);
        emit(st, "saved " + st.name + " to " + st.args[0], st.args[0], {});
        break;
      }
      case StatementKind::Load: {
        LoadedState loaded = sagbi::loadState(st.args[0], currentRing);
        loaded.name = st.name;
        registerLoaded(std::move(loaded), st.name);
        const Entry& e = objects.at(st.name);
        emit(st, e.basis->summary(), basisJson(*e.basis, st.name, e.ringName), {});
        break;
      }
    }
  }
};

Interpreter::Interpreter(std::ostream& out, InterpreterOptions options)
    : impl_(std::make_unique<Impl>(out, options)) {}

Interpreter::~Interpreter() = default;

std::vector<std::string> Interpreter::declaredNames() const {
  std::vector<std::string> names;
  for (const auto& [n, e] : impl_->objects) names.push_back(n);
  return names;
}

void Interpreter::loadState(const std::filesystem::path& path) {
  impl_->registerLoaded(sagbi::loadState(path, impl_->currentRing), "S");
}

void Interpreter::saveState(const std::filesystem::path& path) const {
  if (!impl_->lastBasis) fail(ErrorKind::InvalidInput, "no computation object to save");
  const Entry& e = impl_->objects.at(*impl_->lastBasis);
  if (!e.basis) fail(ErrorKind::InvalidInput, "'" + *impl_->lastBasis + "' has no computation object");
  sagbi::saveState(*e.basis, path, *impl_->lastBasis, e.ringName);
}

void Interpreter::execute(const Script& script) {
  for (const auto& st : script.statements) {
    try {
      impl_->run(st);
    } catch (const Error& e) {
      throw Error(e.kind(), "line " + std::to_string(st.line) + ": " + e.what());
    }
  }
}

void Interpreter::execute(std::string_view scriptText) { execute(parseScript(scriptText, declaredNames())); }

void Interpreter::finish(const Error* error) {
  if (!impl_->structured()) {
    impl_->out.flush();
    return;
  }
  json doc = {{"format_version", kStateFormatVersion}, {"results", impl_->results}};
  const auto last = impl_->lastBasis ? impl_->objects.find(*impl_->lastBasis) : impl_->objects.end();
  if (last != impl_->objects.end() && last->second.basis) {
    const Entry& e = last->second;
    doc["state"] = stateJson(stateFields(*e.basis, *impl_->lastBasis, e.ringName));
  }
  if (error) doc["error"] = {{"kind", errorKindName(error->kind())}, {"message", error->what()}};
  impl_->out << doc.dump(2) << '\n';
}

}  // namespace sagbi
