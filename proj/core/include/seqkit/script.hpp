#pragma once

#include <string>
#include <variant>
#include <vector>

#include "seqkit/error.hpp"
#include "seqkit/term.hpp"

namespace seqkit {

struct DeclareSortCmd {
  std::string name;
};
struct DeclareConstCmd {  // also covers declare-fun
  std::string name;
  Sort sort;
};
struct DefineFunCmd {
  std::string name;
  std::vector<std::pair<std::string, Sort>> params;
  Sort ret;
  Term body;
};
struct AssertCmd {
  Term formula;
};
struct CheckSatBoundedCmd {};
struct EvalCmd {
  Term term;
};
struct SetOptionCmd {
  std::string key;  // without the leading ':'
  std::string value;
};
// Pins one token's value; emitted in model blocks and accepted back so a
// printed witness re-parses as a script.
struct UndefCmd {
  Term application;
  Term value;
};

using CommandData =
    std::variant<DeclareSortCmd, DeclareConstCmd, DefineFunCmd, AssertCmd,
                 CheckSatBoundedCmd, EvalCmd, SetOptionCmd, UndefCmd>;

struct Command {
  CommandData data;
  Position pos;

  template <class T>
  const T* as() const {
    return std::get_if<T>(&data);
  }
};

struct Script {
  std::vector<Command> commands;
};

}  // namespace seqkit
