#include "seqkit/signature.hpp"

#include <unordered_map>

#include "seqkit/error.hpp"

namespace seqkit {

const char* to_string(SemanticsProfile p) {
  switch (p) {
    case SemanticsProfile::Proposal: return "proposal";
    case SemanticsProfile::Cvc5: return "cvc5";
    case SemanticsProfile::Z3: return "z3";
    case SemanticsProfile::ArrayC: return "arrayc";
  }
  return "?";
}

bool profile_from_string(std::string_view name, SemanticsProfile& out) {
  if (name == "proposal") out = SemanticsProfile::Proposal;
  else if (name == "cvc5") out = SemanticsProfile::Cvc5;
  else if (name == "z3") out = SemanticsProfile::Z3;
  else if (name == "arrayc") out = SemanticsProfile::ArrayC;
  else return false;
  return true;
}

namespace {

constexpr unsigned P = profile_bit(SemanticsProfile::Proposal);
constexpr unsigned C = profile_bit(SemanticsProfile::Cvc5);
constexpr unsigned Z = profile_bit(SemanticsProfile::Z3);
constexpr unsigned A = profile_bit(SemanticsProfile::ArrayC);

std::vector<SymbolDecl> build_table() {
  std::vector<SymbolDecl> t;
  auto row = [&](SymbolId id, const char* name, int lo, int hi, bool var,
                 unsigned prof, const char* shape) {
    t.push_back(SymbolDecl{id, name, lo, hi, var, prof, shape});
  };
  // Sequence vocabulary. Profile sets follow the per-theory availability:
  // the proposal carries everything, cvc5 adds replace_all/rev/update to
  // the common core, z3 adds map/mapi/fold, the array model carries the
  // reducible core.
  row(SymbolId::SeqEmpty, "seq.empty", 0, 0, false, P | C | Z | A,
      "(Seq a)");
  row(SymbolId::SeqConst, "seq.const", 2, 2, false, P | A,
      "Int a -> (Seq a)");
  row(SymbolId::SeqUnit, "seq.unit", 1, 1, false, P | C | Z | A,
      "a -> (Seq a)");
  row(SymbolId::SeqLen, "seq.len", 1, 1, false, P | C | Z | A,
      "(Seq a) -> Int");
  row(SymbolId::SeqGet, "seq.get", 2, 2, false, P | C | Z | A,
      "(Seq a) Int -> a");
  row(SymbolId::SeqSet, "seq.set", 3, 3, false, P | A,
      "(Seq a) Int a -> (Seq a)");
  row(SymbolId::SeqSlice, "seq.slice", 3, 3, false, P | C | Z | A,
      "(Seq a) Int Int -> (Seq a)");
  row(SymbolId::SeqConcat, "seq.concat", 1, -1, true, P | C | Z | A,
      "(Seq a)+ -> (Seq a)");
  row(SymbolId::SeqAt, "seq.at", 2, 2, false, P | C | Z | A,
      "(Seq a) Int -> (Seq a)");
  row(SymbolId::SeqContains, "seq.contains", 2, 2, false, P | C | Z,
      "(Seq a) (Seq a) -> Bool");
  row(SymbolId::SeqReplace, "seq.replace", 3, 3, false, P | C | Z,
      "(Seq a) (Seq a) (Seq a) -> (Seq a)");
  row(SymbolId::SeqIndexof, "seq.indexof", 2, 3, false, P | C | Z,
      "(Seq a) (Seq a) Int? -> Int");
  row(SymbolId::SeqPrefixof, "seq.prefixof", 2, 2, false, P | C | Z,
      "(Seq a) (Seq a) -> Bool");
  row(SymbolId::SeqSuffixof, "seq.suffixof", 2, 2, false, P | C | Z,
      "(Seq a) (Seq a) -> Bool");
  row(SymbolId::SeqReplaceAll, "seq.replace_all", 3, 3, false, P | C,
      "(Seq a) (Seq a) (Seq a) -> (Seq a)");
  row(SymbolId::SeqRev, "seq.rev", 1, 1, false, P | C, "(Seq a) -> (Seq a)");
  row(SymbolId::SeqUpdate, "seq.update", 3, 3, false, P | C,
      "(Seq a) Int (Seq a) -> (Seq a)");
  row(SymbolId::SeqMap, "seq.map", 2, -1, true, P | Z | A,
      "(-> a1..an b) (Seq a1)..(Seq an) -> (Seq b)");
  row(SymbolId::SeqMapi, "seq.mapi", 3, -1, true, P | Z,
      "(-> Int a1..an b) Int (Seq a1)..(Seq an) -> (Seq b)");
  row(SymbolId::SeqFoldLeft, "seq.fold_left", 3, 3, false, P | Z,
      "(-> b a b) b (Seq a) -> b");
  row(SymbolId::SeqFoldLefti, "seq.fold_lefti", 4, 4, false, P | Z,
      "(-> Int b a b) Int b (Seq a) -> b");
  row(SymbolId::SeqGetDefault, "seq.get_default", 3, 3, false, P | C | Z | A,
      "(Seq a) Int a -> a");
  // Array-with-concat vocabulary, the reduction target.
  row(SymbolId::ArrcLength, "arrc.length", 1, 1, false, A, "(Seq a) -> Int");
  row(SymbolId::ArrcNth, "arrc.nth", 2, 2, false, A, "(Seq a) Int -> a");
  row(SymbolId::ArrcRepeat, "arrc.repeat", 2, 2, false, A,
      "a Int -> (Seq a)");
  row(SymbolId::ArrcApp, "arrc.app", 2, 2, false, A,
      "(Seq a) (Seq a) -> (Seq a)");
  row(SymbolId::ArrcSlice, "arrc.slice", 3, 3, false, A,
      "(Seq a) Int Int -> (Seq a)");
  row(SymbolId::ArrcUpdate, "arrc.update", 3, 3, false, A,
      "Int (Seq a) a -> (Seq a)");
  row(SymbolId::ArrcMap, "arrc.map", 2, -1, true, A,
      "(-> a1..an b) (Seq a1)..(Seq an) -> (Seq b)");
  return t;
}

}  // namespace

const std::vector<SymbolDecl>& signature_table() {
  static const std::vector<SymbolDecl> table = build_table();
  return table;
}

const SymbolDecl* lookup_symbol(std::string_view name) {
  static const auto index = [] {
    std::unordered_map<std::string_view, const SymbolDecl*> m;
    for (const auto& d : signature_table()) m.emplace(d.name, &d);
    return m;
  }();
  auto it = index.find(name);
  return it == index.end() ? nullptr : it->second;
}

const SymbolDecl& symbol_decl(SymbolId id) {
  // Rows are pushed in SymbolId order, so the table is indexable by id.
  const auto& table = signature_table();
  auto idx = static_cast<size_t>(id);
  if (idx >= table.size() || table[idx].id != id)
    throw SeqkitError(ErrorKind::UnknownSymbol, "symbol id not in table");
  return table[idx];
}

}  // namespace seqkit
