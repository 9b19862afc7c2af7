#include "seqkit/error.hpp"

namespace seqkit {

std::string Position::to_string() const {
  if (!known()) return "<unknown>";
  return std::to_string(line) + ":" + std::to_string(column);
}

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Syntax: return "syntax error";
    case ErrorKind::UnknownSymbol: return "unknown symbol";
    case ErrorKind::UnsortedVariable: return "unsorted variable";
    case ErrorKind::ArityMismatch: return "arity mismatch";
    case ErrorKind::SortMismatch: return "sort mismatch";
    case ErrorKind::ProfileViolation: return "profile violation";
    case ErrorKind::MissingToken: return "missing token";
    case ErrorKind::UnresolvedToken: return "unresolved token";
    case ErrorKind::MissingFnEntry: return "missing function entry";
    case ErrorKind::WindowTooSmall: return "window too small";
    case ErrorKind::UniverseTooLarge: return "universe too large";
    case ErrorKind::NotInFragment: return "not in fragment";
    case ErrorKind::UnknownSchema: return "unknown schema";
    case ErrorKind::BadCommand: return "bad command";
    case ErrorKind::Resource: return "resource limit";
    case ErrorKind::Io: return "io error";
  }
  return "error";
}

namespace {
std::string format_message(ErrorKind kind, const std::string& msg,
                           const std::optional<Position>& pos) {
  std::string out;
  if (pos && pos->known()) out += pos->to_string() + ": ";
  out += to_string(kind);
  out += ": ";
  out += msg;
  return out;
}
}  // namespace

SeqkitError::SeqkitError(ErrorKind kind, const std::string& msg,
                         std::optional<Position> pos)
    : std::runtime_error(format_message(kind, msg, pos)),
      kind_(kind),
      pos_(pos) {}

}  // namespace seqkit
