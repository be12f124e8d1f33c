#include "sagbi/error.hpp"

namespace sagbi {

std::string_view errorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::RingMismatch: return "ring-mismatch";
    case ErrorKind::Incomplete: return "incomplete-input";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Reference: return "reference";
    case ErrorKind::Io: return "io";
    case ErrorKind::StateFormat: return "state-format";
  }
  return "unknown";
}

}  // namespace sagbi
