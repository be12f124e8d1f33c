#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sagbi {

// Diagnostic categories surfaced by the CLI as distinct exit codes.
enum class ErrorKind {
  InvalidInput,
  Domain,
  RingMismatch,
  Incomplete,
  Parse,
  Reference,
  Io,
  StateFormat,
};

std::string_view errorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace sagbi
