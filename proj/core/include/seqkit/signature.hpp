#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace seqkit {

enum class SemanticsProfile { Proposal, Cvc5, Z3, ArrayC };

const char* to_string(SemanticsProfile p);
// Accepts "proposal", "cvc5", "z3", "arrayc"; returns false on anything else.
bool profile_from_string(std::string_view name, SemanticsProfile& out);

enum class SymbolId {
  SeqEmpty,
  SeqConst,
  SeqUnit,
  SeqLen,
  SeqGet,
  SeqSet,
  SeqSlice,
  SeqConcat,
  SeqAt,
  SeqContains,
  SeqReplace,
  SeqIndexof,
  SeqPrefixof,
  SeqSuffixof,
  SeqReplaceAll,
  SeqRev,
  SeqUpdate,
  SeqMap,
  SeqMapi,
  SeqFoldLeft,
  SeqFoldLefti,
  SeqGetDefault,
  ArrcLength,
  ArrcNth,
  ArrcRepeat,
  ArrcApp,
  ArrcSlice,
  ArrcUpdate,
  ArrcMap,
};

constexpr unsigned profile_bit(SemanticsProfile p) {
  return 1u << static_cast<unsigned>(p);
}
constexpr unsigned kAllProfiles =
    profile_bit(SemanticsProfile::Proposal) | profile_bit(SemanticsProfile::Cvc5) |
    profile_bit(SemanticsProfile::Z3) | profile_bit(SemanticsProfile::ArrayC);

struct SymbolDecl {
  SymbolId id;
  const char* name;
  int min_arity;
  int max_arity;  // -1: unbounded (variadic)
  bool variadic;
  unsigned profiles;       // bitmask of profile_bit
  const char* sort_shape;  // human-readable schematic sort, for messages
};

const std::vector<SymbolDecl>& signature_table();
const SymbolDecl* lookup_symbol(std::string_view name);
const SymbolDecl& symbol_decl(SymbolId id);
inline const char* symbol_name(SymbolId id) { return symbol_decl(id).name; }

inline bool in_profile(SymbolId id, SemanticsProfile p) {
  return (symbol_decl(id).profiles & profile_bit(p)) != 0;
}

}  // namespace seqkit
