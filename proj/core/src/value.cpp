#include "seqkit/value.hpp"

#include <functional>

#include "seqkit/error.hpp"

namespace seqkit {

namespace {

[[noreturn]] void unresolved(const TokenKey& key) {
  std::string args;
  for (const auto& a : key.args) {
    args += ' ';
    args += a.to_string();
  }
  throw SeqkitError(ErrorKind::UnresolvedToken,
                    "unspecified value (" + key.symbol + args +
                        ") used where a concrete value is required");
}

int cmp_ll(long long a, long long b) { return a < b ? -1 : a > b ? 1 : 0; }

}  // namespace

bool TokenKey::operator==(const TokenKey& other) const {
  if (symbol != other.symbol || args.size() != other.args.size()) return false;
  for (size_t i = 0; i < args.size(); ++i)
    if (!args[i].equals(other.args[i])) return false;
  return true;
}

bool TokenKey::operator<(const TokenKey& other) const {
  if (symbol != other.symbol) return symbol < other.symbol;
  size_t n = std::min(args.size(), other.args.size());
  for (size_t i = 0; i < n; ++i) {
    int c = args[i].compare(other.args[i]);
    if (c != 0) return c < 0;
  }
  return args.size() < other.args.size();
}

const Value* FnTableData::lookup(const std::vector<Value>& args) const {
  for (const auto& [key, val] : entries) {
    if (key.size() != args.size()) continue;
    bool match = true;
    for (size_t i = 0; i < key.size(); ++i) {
      if (!key[i].equals(args[i])) {
        match = false;
        break;
      }
    }
    if (match) return &val;
  }
  return nullptr;
}

Value Value::integer(long long v) {
  Value r;
  r.kind_ = ValueKind::Int;
  r.init_ = true;
  r.ival_ = v;
  return r;
}

Value Value::boolean(bool v) {
  Value r;
  r.kind_ = ValueKind::Bool;
  r.init_ = true;
  r.bval_ = v;
  return r;
}

Value Value::elem(Sort elem_sort, int index) {
  if (!elem_sort.is_elem())
    throw SeqkitError(ErrorKind::SortMismatch,
                      "element value needs an element sort");
  Value r;
  r.kind_ = ValueKind::Elem;
  r.init_ = true;
  r.elem_index_ = index;
  r.sort_ = std::move(elem_sort);
  return r;
}

Value Value::seq(Sort elem_sort, std::vector<Value> elems) {
  Value r;
  r.kind_ = ValueKind::Seq;
  r.init_ = true;
  auto data = std::make_shared<SeqData>();
  data->elem = std::move(elem_sort);
  data->elems = std::move(elems);
  r.seq_ = std::move(data);
  return r;
}

Value Value::fn_def(Sort fn_sort, std::shared_ptr<const FnDef> def) {
  Value r;
  r.kind_ = ValueKind::Fn;
  r.init_ = true;
  r.sort_ = std::move(fn_sort);
  r.def_ = std::move(def);
  return r;
}

Value Value::fn_table(Sort fn_sort, std::shared_ptr<const FnTableData> table) {
  Value r;
  r.kind_ = ValueKind::Fn;
  r.init_ = true;
  r.sort_ = std::move(fn_sort);
  r.table_ = std::move(table);
  return r;
}

Value Value::unspecified(Sort sort, TokenKey key) {
  Value r;
  r.kind_ = ValueKind::Unspecified;
  r.init_ = true;
  r.sort_ = std::move(sort);
  r.token_ = std::make_shared<const TokenKey>(std::move(key));
  return r;
}

Value Value::default_of(Sort sort) {
  Value r;
  r.kind_ = ValueKind::Default;
  r.init_ = true;
  r.sort_ = std::move(sort);
  return r;
}

long long Value::as_int() const {
  if (kind_ == ValueKind::Unspecified) unresolved(*token_);
  if (kind_ != ValueKind::Int || !init_)
    throw SeqkitError(ErrorKind::SortMismatch, "not an integer value");
  return ival_;
}

bool Value::as_bool() const {
  if (kind_ == ValueKind::Unspecified) unresolved(*token_);
  if (kind_ != ValueKind::Bool)
    throw SeqkitError(ErrorKind::SortMismatch, "not a boolean value");
  return bval_;
}

int Value::elem_index() const {
  if (kind_ == ValueKind::Unspecified) unresolved(*token_);
  if (kind_ != ValueKind::Elem)
    throw SeqkitError(ErrorKind::SortMismatch, "not an element value");
  return elem_index_;
}

const Sort& Value::elem_sort() const {
  if (kind_ != ValueKind::Elem)
    throw SeqkitError(ErrorKind::SortMismatch, "not an element value");
  return sort_;
}

const SeqData& Value::seq() const {
  if (kind_ == ValueKind::Unspecified) unresolved(*token_);
  if (kind_ != ValueKind::Seq)
    throw SeqkitError(ErrorKind::SortMismatch, "not a sequence value");
  return *seq_;
}

const Sort& Value::fn_sort() const {
  if (kind_ != ValueKind::Fn)
    throw SeqkitError(ErrorKind::SortMismatch, "not a function value");
  return sort_;
}

const TokenKey& Value::token() const {
  if (kind_ != ValueKind::Unspecified)
    throw SeqkitError(ErrorKind::SortMismatch, "not an unspecified value");
  return *token_;
}

Sort Value::sort_hint() const {
  switch (kind_) {
    case ValueKind::Int:
      return Sort::integer();
    case ValueKind::Bool:
      return Sort::boolean();
    case ValueKind::Elem:
    case ValueKind::Fn:
    case ValueKind::Unspecified:
    case ValueKind::Default:
      return sort_;
    case ValueKind::Seq:
      return Sort::seq(seq_->elem);
  }
  return Sort();
}

bool Value::equals(const Value& other) const {
  if (kind_ == ValueKind::Unspecified || other.kind_ == ValueKind::Unspecified) {
    // Same token, same value: congruence makes this equality true. Any
    // other comparison cannot be decided without resolving the token.
    if (kind_ == ValueKind::Unspecified &&
        other.kind_ == ValueKind::Unspecified && *token_ == *other.token_)
      return true;
    unresolved(kind_ == ValueKind::Unspecified ? *token_ : *other.token_);
  }
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case ValueKind::Int:
      return ival_ == other.ival_;
    case ValueKind::Bool:
      return bval_ == other.bval_;
    case ValueKind::Elem:
      return elem_index_ == other.elem_index_ && sort_ == other.sort_;
    case ValueKind::Seq: {
      const SeqData& a = *seq_;
      const SeqData& b = *other.seq_;
      if (a.elems.size() != b.elems.size()) return false;
      for (size_t i = 0; i < a.elems.size(); ++i)
        if (!a.elems[i].equals(b.elems[i])) return false;
      return true;
    }
    case ValueKind::Default:
      return sort_ == other.sort_;
    case ValueKind::Fn:
      throw SeqkitError(ErrorKind::SortMismatch,
                        "function values cannot be compared");
    default:
      return false;
  }
}

int Value::compare(const Value& other) const {
  if (kind_ == ValueKind::Unspecified || other.kind_ == ValueKind::Unspecified)
    unresolved(kind_ == ValueKind::Unspecified ? *token_ : *other.token_);
  if (kind_ == ValueKind::Fn || other.kind_ == ValueKind::Fn)
    throw SeqkitError(ErrorKind::SortMismatch,
                      "function values have no order");
  if (kind_ != other.kind_)
    return cmp_ll(static_cast<long long>(kind_),
                  static_cast<long long>(other.kind_));
  switch (kind_) {
    case ValueKind::Int:
      return cmp_ll(ival_, other.ival_);
    case ValueKind::Bool:
      return cmp_ll(bval_ ? 1 : 0, other.bval_ ? 1 : 0);
    case ValueKind::Elem:
      return cmp_ll(elem_index_, other.elem_index_);
    case ValueKind::Seq: {
      const SeqData& a = *seq_;
      const SeqData& b = *other.seq_;
      size_t n = std::min(a.elems.size(), b.elems.size());
      for (size_t i = 0; i < n; ++i) {
        int c = a.elems[i].compare(b.elems[i]);
        if (c != 0) return c;
      }
      return cmp_ll(static_cast<long long>(a.elems.size()),
                    static_cast<long long>(b.elems.size()));
    }
    case ValueKind::Default:
      return 0;
    default:
      return 0;
  }
}

size_t Value::hash() const {
  auto combine = [](size_t seed, size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
  };
  switch (kind_) {
    case ValueKind::Int:
      return std::hash<long long>{}(ival_);
    case ValueKind::Bool:
      return bval_ ? 0x5bd1e995 : 0xcafef00d;
    case ValueKind::Elem:
      return combine(std::hash<std::string>{}(sort_.to_string()),
                     std::hash<int>{}(elem_index_));
    case ValueKind::Seq: {
      size_t h = 0x1234567;
      for (const auto& e : seq_->elems) h = combine(h, e.hash());
      return h;
    }
    case ValueKind::Unspecified: {
      size_t h = std::hash<std::string>{}(token_->symbol);
      for (const auto& a : token_->args) h = combine(h, a.hash());
      return h;
    }
    case ValueKind::Default:
      return std::hash<std::string>{}("default:" + sort_.to_string());
    case ValueKind::Fn:
      return std::hash<std::string>{}("fn:" + sort_.to_string());
  }
  return 0;
}

std::string Value::to_string() const {
  switch (kind_) {
    case ValueKind::Int:
      return std::to_string(ival_);
    case ValueKind::Bool:
      return bval_ ? "true" : "false";
    case ValueKind::Elem:
      return "@e" + std::to_string(elem_index_);
    case ValueKind::Seq: {
      std::string out = "[";
      for (size_t i = 0; i < seq_->elems.size(); ++i) {
        if (i) out += ' ';
        out += seq_->elems[i].to_string();
      }
      return out + "]";
    }
    case ValueKind::Fn:
      return def_ ? "<fn " + def_->name + ">" : "<fn table>";
    case ValueKind::Unspecified: {
      std::string out = "(? " + token_->symbol;
      for (const auto& a : token_->args) out += ' ' + a.to_string();
      return out + ")";
    }
    case ValueKind::Default:
      return "<default " + sort_.to_string() + ">";
  }
  return "<null>";
}

}  // namespace seqkit
