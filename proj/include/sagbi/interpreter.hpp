#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "sagbi/error.hpp"
#include "sagbi/script.hpp"

namespace sagbi {

enum class OutputFormat { Text, Structured };

struct InterpreterOptions {
  int printLevel = 0;
  OutputFormat format = OutputFormat::Text;
};

/// Executes scripts against a session of named rings, subrings and
/// computation objects.
///
/// Text output numbers each statement's result as `[n]`; trace lines start
/// with `--`. Structured output is a single JSON document written by finish().
class Interpreter {
 public:
  Interpreter(std::ostream& out, InterpreterOptions options = {});
  ~Interpreter();
  Interpreter(const Interpreter&) = delete;
  Interpreter& operator=(const Interpreter&) = delete;

  std::vector<std::string> declaredNames() const;

  /// Registers the stored computation under its saved name (default `S`).
  void loadState(const std::filesystem::path& path);
  /// Writes the most recently computed or loaded computation object.
  void saveState(const std::filesystem::path& path) const;

  void execute(const Script& script);
  void execute(std::string_view scriptText);

  /// Structured format: emits the JSON document, including `error` when given.
  void finish(const Error* error = nullptr);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace sagbi
