#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sagbi/subalgebra.hpp"

namespace sagbi {

enum class StatementKind {
  Ring,
  Subring,
  Sagbi,
  Check,
  Subduct,
  Member,
  NormalForm,
  Quotient,
  Gens,
  Intersect,
  FullIntersection,
  Save,
  Load,
  Select,
};

std::string_view statementKeyword(StatementKind kind);

/// One `;`-terminated statement. Polynomial text stays unparsed until the
/// ring it lives in is known.
struct Statement {
  StatementKind kind;
  int line = 0;
  std::string name;
  // ring: vars, order, quotient list (may be empty)
  // subring: symbol, generator list
  // subduct/member/normalform/quotient: polynomial
  // intersect: first, second
  // save/load: path
  // select: block index
  std::vector<std::string> args;
  std::vector<std::pair<std::string, std::string>> options;
};

struct Script {
  std::vector<Statement> statements;
};

/// Applies one `key=value` statement option; throws a parse error for an
/// unknown key or a malformed value.
void applyOption(SagbiOptions& options, std::string_view key, std::string_view value);

/// Parses the script grammar; `#` starts a comment. Errors are prefixed
/// with the line number. `predeclared` names count as already defined.
Script parseScript(std::string_view text, const std::vector<std::string>& predeclared = {});

}  // namespace sagbi
