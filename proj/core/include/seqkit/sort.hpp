#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace seqkit {

enum class SortKind { Bool, Int, Elem, Seq, Fn };

// Immutable, cheaply copyable sort. Seq element sorts are never Fn;
// Fn sorts are first-order (no Fn arguments or results).
class Sort {
 public:
  Sort() = default;  // null sort, only valid as a placeholder

  static Sort boolean();
  static Sort integer();
  static Sort elem(std::string name);
  static Sort seq(Sort element);
  static Sort fn(std::vector<Sort> args, Sort ret);

  bool is_null() const { return rep_ == nullptr; }
  SortKind kind() const;
  bool is_bool() const { return !is_null() && kind() == SortKind::Bool; }
  bool is_int() const { return !is_null() && kind() == SortKind::Int; }
  bool is_elem() const { return !is_null() && kind() == SortKind::Elem; }
  bool is_seq() const { return !is_null() && kind() == SortKind::Seq; }
  bool is_fn() const { return !is_null() && kind() == SortKind::Fn; }

  const std::string& elem_name() const;
  const Sort& seq_elem() const;
  const std::vector<Sort>& fn_args() const;
  const Sort& fn_ret() const;

  bool operator==(const Sort& other) const;
  bool operator!=(const Sort& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  struct Rep;
  explicit Sort(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

using SortEnv = std::map<std::string, Sort>;

}  // namespace seqkit
