#include "seqkit/sort.hpp"

#include "seqkit/error.hpp"

namespace seqkit {

struct Sort::Rep {
  SortKind kind;
  std::string name;        // Elem
  Sort element;            // Seq
  std::vector<Sort> args;  // Fn
  Sort ret;                // Fn
};

Sort Sort::boolean() {
  static const Sort s(
      std::make_shared<const Rep>(Rep{SortKind::Bool, {}, {}, {}, {}}));
  return s;
}

Sort Sort::integer() {
  static const Sort s(
      std::make_shared<const Rep>(Rep{SortKind::Int, {}, {}, {}, {}}));
  return s;
}

Sort Sort::elem(std::string name) {
  return Sort(std::make_shared<const Rep>(
      Rep{SortKind::Elem, std::move(name), {}, {}, {}}));
}

Sort Sort::seq(Sort element) {
  if (element.is_null() || element.is_fn())
    throw SeqkitError(ErrorKind::SortMismatch,
                      "sequence element sorts cannot be function sorts");
  return Sort(std::make_shared<const Rep>(
      Rep{SortKind::Seq, {}, std::move(element), {}, {}}));
}

Sort Sort::fn(std::vector<Sort> args, Sort ret) {
  if (args.empty())
    throw SeqkitError(ErrorKind::SortMismatch,
                      "function sorts need at least one argument");
  for (const auto& a : args)
    if (a.is_null() || a.is_fn())
      throw SeqkitError(ErrorKind::SortMismatch,
                        "function sorts are first-order");
  if (ret.is_null() || ret.is_fn())
    throw SeqkitError(ErrorKind::SortMismatch,
                      "function sorts are first-order");
  return Sort(std::make_shared<const Rep>(
      Rep{SortKind::Fn, {}, {}, std::move(args), std::move(ret)}));
}

SortKind Sort::kind() const { return rep_->kind; }
const std::string& Sort::elem_name() const { return rep_->name; }
const Sort& Sort::seq_elem() const { return rep_->element; }
const std::vector<Sort>& Sort::fn_args() const { return rep_->args; }
const Sort& Sort::fn_ret() const { return rep_->ret; }

bool Sort::operator==(const Sort& other) const {
  if (rep_ == other.rep_) return true;
  if (!rep_ || !other.rep_) return false;
  if (rep_->kind != other.rep_->kind) return false;
  switch (rep_->kind) {
    case SortKind::Bool:
    case SortKind::Int:
      return true;
    case SortKind::Elem:
      return rep_->name == other.rep_->name;
    case SortKind::Seq:
      return rep_->element == other.rep_->element;
    case SortKind::Fn: {
      if (rep_->args.size() != other.rep_->args.size()) return false;
      for (size_t i = 0; i < rep_->args.size(); ++i)
        if (!(rep_->args[i] == other.rep_->args[i])) return false;
      return rep_->ret == other.rep_->ret;
    }
  }
  return false;
}

std::string Sort::to_string() const {
  if (is_null()) return "<null-sort>";
  switch (rep_->kind) {
    case SortKind::Bool: return "Bool";
    case SortKind::Int: return "Int";
    case SortKind::Elem: return rep_->name;
    case SortKind::Seq: return "(Seq " + rep_->element.to_string() + ")";
    case SortKind::Fn: {
      std::string out = "(->";
      for (const auto& a : rep_->args) out += " " + a.to_string();
      out += " " + rep_->ret.to_string() + ")";
      return out;
    }
  }
  return "<sort>";
}

}  // namespace seqkit
