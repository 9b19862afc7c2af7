#include "seqkit/printer.hpp"

#include "seqkit/error.hpp"

namespace seqkit {

namespace {

std::string int_text(long long v) {
  if (v < 0) return "(- " + std::to_string(-v) + ")";
  return std::to_string(v);
}

void print_rec(const Term& t, const PrintOptions& opts, std::string& out);

void print_app(const Term& t, const PrintOptions& opts, std::string& out) {
  SymbolId sym = t.symbol();
  const char* name = symbol_name(sym);
  if (sym == SymbolId::SeqEmpty) {
    out += "(as seq.empty " + print_sort(t.sort()) + ")";
    return;
  }
  if (opts.flag_extended_arity && opts.warnings) {
    if (sym == SymbolId::SeqReplace) {
      opts.warnings->push_back(
          "seq.replace printed with three sequence arguments");
    } else if (sym == SymbolId::SeqIndexof && t.num_children() == 3) {
      opts.warnings->push_back(
          "seq.indexof printed with an explicit start index");
    }
  }
  out += '(';
  out += name;
  for (const auto& a : t.args()) {
    out += ' ';
    print_rec(a, opts, out);
  }
  out += ')';
}

void print_rec(const Term& t, const PrintOptions& opts, std::string& out) {
  switch (t.kind()) {
    case TermKind::Var:
      out += t.name();
      return;
    case TermKind::IntLit:
      out += int_text(t.int_value());
      return;
    case TermKind::BoolLit:
      out += t.bool_value() ? "true" : "false";
      return;
    case TermKind::ElemLit:
      out += "(as @e" + std::to_string(t.elem_index()) + ' ' +
             print_sort(t.sort()) + ')';
      return;
    case TermKind::App:
      print_app(t, opts, out);
      return;
    case TermKind::FnApply: {
      out += '(';
      print_rec(t.child(0), opts, out);
      for (size_t i = 1; i < t.num_children(); ++i) {
        out += ' ';
        print_rec(t.child(i), opts, out);
      }
      out += ')';
      return;
    }
    case TermKind::Ite:
      out += "(ite ";
      print_rec(t.child(0), opts, out);
      out += ' ';
      print_rec(t.child(1), opts, out);
      out += ' ';
      print_rec(t.child(2), opts, out);
      out += ')';
      return;
    case TermKind::Let:
      out += "(let ((" + t.name() + ' ';
      print_rec(t.child(0), opts, out);
      out += ")) ";
      print_rec(t.child(1), opts, out);
      out += ')';
      return;
    case TermKind::Forall:
      out += "(forall ((" + t.name() + " Int)) ";
      print_rec(t.child(0), opts, out);
      out += ')';
      return;
    case TermKind::Eq:
    case TermKind::And:
    case TermKind::Or:
    case TermKind::Not:
    case TermKind::Implies:
    case TermKind::Le:
    case TermKind::Lt:
    case TermKind::Add:
    case TermKind::Sub:
    case TermKind::Mul: {
      const char* op = "?";
      switch (t.kind()) {
        case TermKind::Eq: op = "="; break;
        case TermKind::And: op = "and"; break;
        case TermKind::Or: op = "or"; break;
        case TermKind::Not: op = "not"; break;
        case TermKind::Implies: op = "=>"; break;
        case TermKind::Le: op = "<="; break;
        case TermKind::Lt: op = "<"; break;
        case TermKind::Add: op = "+"; break;
        case TermKind::Sub: op = "-"; break;
        case TermKind::Mul: op = "*"; break;
        default: break;
      }
      out += '(';
      out += op;
      for (const auto& a : t.args()) {
        out += ' ';
        print_rec(a, opts, out);
      }
      out += ')';
      return;
    }
  }
}

}  // namespace

std::string print_sort(const Sort& s) { return s.to_string(); }

std::string print_term(const Term& t, const PrintOptions& opts) {
  std::string out;
  print_rec(t, opts, out);
  return out;
}

Term value_to_term(const Value& v) {
  switch (v.kind()) {
    case ValueKind::Int:
      return mk::int_lit(v.as_int());
    case ValueKind::Bool:
      return mk::bool_lit(v.as_bool());
    case ValueKind::Elem:
      return mk::elem_lit(v.elem_sort(), v.elem_index());
    case ValueKind::Seq: {
      const SeqData& s = v.seq();
      if (s.elems.empty()) return mk::empty(s.elem);
      std::vector<Term> units;
      units.reserve(s.elems.size());
      for (const auto& e : s.elems) units.push_back(mk::unit(value_to_term(e)));
      if (units.size() == 1) return units[0];
      return mk::concat(std::move(units));
    }
    case ValueKind::Unspecified:
      throw SeqkitError(ErrorKind::UnresolvedToken,
                        "unspecified value has no term form");
    default:
      throw SeqkitError(ErrorKind::SortMismatch,
                        "value of this kind has no term form");
  }
}

std::string print_value(const Value& v) { return print_term(value_to_term(v)); }

std::string print_model(const Model& m) {
  std::string out;
  // Constants first so a function body referencing one re-parses.
  for (const auto& [name, val] : m.base) {
    if (val.kind() == ValueKind::Fn) continue;
    Sort sort = val.sort_hint();
    out += "(define-const " + name + ' ' + print_sort(sort) + ' ' +
           print_value(val) + ")\n";
  }
  for (const auto& [name, val] : m.base) {
    if (val.kind() == ValueKind::Fn) {
      // Function symbols print as define-fun so the block re-parses.
      const Sort& fs = val.fn_sort();
      if (val.fn_def()) {
        const FnDef& d = *val.fn_def();
        out += "(define-fun " + name + " (";
        for (size_t i = 0; i < d.params.size(); ++i) {
          if (i) out += ' ';
          out += '(' + d.params[i].first + ' ' +
                 print_sort(d.params[i].second) + ')';
        }
        out += ") " + print_sort(fs.fn_ret()) + ' ' + print_term(d.body) +
               ")\n";
        continue;
      }
      const auto& table = val.fn_table();
      if (!table || table->entries.empty())
        throw SeqkitError(ErrorKind::SortMismatch,
                          "function value " + name + " has no printable form");
      std::vector<Term> params;
      for (size_t i = 0; i < fs.fn_args().size(); ++i)
        params.push_back(mk::var("x" + std::to_string(i), fs.fn_args()[i]));
      // Table as a nested ite chain; the final row doubles as the else arm.
      Term body = value_to_term(table->entries.back().second);
      for (size_t r = table->entries.size() - 1; r-- > 0;) {
        const auto& [args, res] = table->entries[r];
        std::vector<Term> eqs;
        for (size_t i = 0; i < params.size(); ++i)
          eqs.push_back(mk::eq(params[i], value_to_term(args[i])));
        body = mk::ite(mk::and_(std::move(eqs)), value_to_term(res), body);
      }
      out += "(define-fun " + name + " (";
      for (size_t i = 0; i < params.size(); ++i) {
        if (i) out += ' ';
        out += '(' + params[i].name() + ' ' + print_sort(fs.fn_args()[i]) + ')';
      }
      out += ") " + print_sort(fs.fn_ret()) + ' ' + print_term(body) + ")\n";
      continue;
    }
  }
  for (const auto& [key, val] : m.tokens) {
    out += "(undef (" + key.symbol;
    for (const auto& a : key.args) {
      out += ' ';
      out += print_value(a);
    }
    out += ") " + print_value(val) + ")\n";
  }
  return out;
}

}  // namespace seqkit
