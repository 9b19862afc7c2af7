#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace seqkit {

struct Position {
  int line = 0;  // 1-based, 0 means unknown
  int column = 0;

  bool known() const { return line > 0; }
  std::string to_string() const;
};

enum class ErrorKind {
  Syntax,
  UnknownSymbol,
  UnsortedVariable,
  ArityMismatch,
  SortMismatch,
  ProfileViolation,
  MissingToken,
  UnresolvedToken,
  MissingFnEntry,
  WindowTooSmall,
  UniverseTooLarge,
  NotInFragment,
  UnknownSchema,
  BadCommand,
  Resource,
  Io,
};

const char* to_string(ErrorKind k);

class SeqkitError : public std::runtime_error {
 public:
  SeqkitError(ErrorKind kind, const std::string& msg,
              std::optional<Position> pos = std::nullopt);

  ErrorKind kind() const { return kind_; }
  const std::optional<Position>& pos() const { return pos_; }

 private:
  ErrorKind kind_;
  std::optional<Position> pos_;
};

}  // namespace seqkit
