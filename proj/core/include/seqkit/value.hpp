#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "seqkit/sort.hpp"
#include "seqkit/term.hpp"

namespace seqkit {

class Value;

struct SeqData {
  Sort elem;  // element sort, kept so empty sequences stay printable
  std::vector<Value> elems;
};

// Key of an unspecified application: symbol name plus grounded argument
// values. Congruence is by structural equality of this key.
struct TokenKey {
  std::string symbol;
  std::vector<Value> args;

  bool operator==(const TokenKey& other) const;
  bool operator<(const TokenKey& other) const;  // symbol, then args lexicographic
};

struct FnDef {
  std::string name;
  std::vector<std::pair<std::string, Sort>> params;
  Term body;
};

// Explicit function table, total over an enumerated argument domain.
// Entries are kept sorted by argument tuple.
struct FnTableData {
  std::vector<std::pair<std::vector<Value>, Value>> entries;
  const Value* lookup(const std::vector<Value>& args) const;
};

enum class ValueKind { Int, Bool, Elem, Seq, Fn, Unspecified, Default };

class Value {
 public:
  Value() = default;

  static Value integer(long long v);
  static Value boolean(bool v);
  static Value elem(Sort elem_sort, int index);
  static Value seq(Sort elem_sort, std::vector<Value> elems);
  static Value fn_def(Sort fn_sort, std::shared_ptr<const FnDef> def);
  static Value fn_table(Sort fn_sort, std::shared_ptr<const FnTableData> table);
  static Value unspecified(Sort sort, TokenKey key);
  static Value default_of(Sort sort);

  bool is_null() const { return kind_ == ValueKind::Int && !init_; }
  ValueKind kind() const { return kind_; }
  bool is_unspecified() const { return kind_ == ValueKind::Unspecified; }

  // Accessors throw UnresolvedToken when the value is an unapplied token,
  // so an unspecified value used in a strict position fails loudly.
  long long as_int() const;
  bool as_bool() const;
  int elem_index() const;
  const Sort& elem_sort() const;
  const SeqData& seq() const;
  const Sort& fn_sort() const;
  const std::shared_ptr<const FnDef>& fn_def() const { return def_; }
  const std::shared_ptr<const FnTableData>& fn_table() const { return table_; }
  const TokenKey& token() const;
  const Sort& default_sort() const { return sort_; }

  Sort sort_hint() const;  // best-effort sort of this value

  // Deep structural equality. Two unspecified values with the same key are
  // equal; comparing an unspecified value against anything else throws
  // UnresolvedToken (the caller must resolve tokens first).
  bool equals(const Value& other) const;
  // Total order over concrete values of one sort, used for deterministic
  // ordering of token keys and model output. Throws on Fn and Unspecified.
  int compare(const Value& other) const;
  size_t hash() const;

  std::string to_string() const;  // debug form

 private:
  ValueKind kind_ = ValueKind::Int;
  bool init_ = false;
  long long ival_ = 0;
  bool bval_ = false;
  int elem_index_ = 0;
  Sort sort_;  // Elem sort / Fn sort / Unspecified sort / Default sort
  std::shared_ptr<const SeqData> seq_;
  std::shared_ptr<const FnDef> def_;
  std::shared_ptr<const FnTableData> table_;
  std::shared_ptr<const TokenKey> token_;
};

using TokenAssignment = std::map<TokenKey, Value>;

// A bounded model: concrete values for the enumerated free symbols plus an
// assignment for every token the formula reaches under those values.
struct Model {
  std::map<std::string, Value> base;
  TokenAssignment tokens;
};

}  // namespace seqkit
