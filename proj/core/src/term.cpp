#include "seqkit/term.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "seqkit/error.hpp"

namespace seqkit {

struct Term::Node {
  TermKind kind;
  Sort sort;
  std::string name;     // Var, Let/Forall binder
  long long ival = 0;   // IntLit
  bool bval = false;    // BoolLit
  int elem_index = 0;   // ElemLit
  SymbolId sym = SymbolId::SeqEmpty;
  std::vector<Term> args;

  Node(TermKind k, Sort s, std::string n = "")
      : kind(k), sort(std::move(s)), name(std::move(n)) {}
};

struct TermBuilder {
  using Node = Term::Node;
  static Term make(Node node) {
    return Term(std::make_shared<const Node>(std::move(node)));
  }
};

TermKind Term::kind() const { return node_->kind; }
const Sort& Term::sort() const { return node_->sort; }
const std::string& Term::name() const { return node_->name; }
long long Term::int_value() const { return node_->ival; }
bool Term::bool_value() const { return node_->bval; }
int Term::elem_index() const { return node_->elem_index; }
SymbolId Term::symbol() const { return node_->sym; }
const std::vector<Term>& Term::args() const { return node_->args; }

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.kind != b.kind || !(a.sort == b.sort)) return false;
  switch (a.kind) {
    case TermKind::Var:
      return a.name == b.name;
    case TermKind::IntLit:
      return a.ival == b.ival;
    case TermKind::BoolLit:
      return a.bval == b.bval;
    case TermKind::ElemLit:
      return a.elem_index == b.elem_index;
    case TermKind::App:
      if (a.sym != b.sym) return false;
      break;
    case TermKind::Let:
    case TermKind::Forall:
      if (a.name != b.name) return false;
      break;
    default:
      break;
  }
  if (a.args.size() != b.args.size()) return false;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (!(a.args[i] == b.args[i])) return false;
  return true;
}

namespace {

[[noreturn]] void sort_error(const std::string& msg) {
  throw SeqkitError(ErrorKind::SortMismatch, msg);
}

void need_int(const Term& t, const char* what) {
  if (!t.sort().is_int()) {
    sort_error(std::string(what) + " must be Int, got " + t.sort().to_string());
  }
}

void need_bool(const Term& t, const char* what) {
  if (!t.sort().is_bool()) {
    sort_error(std::string(what) + " must be Bool, got " +
               t.sort().to_string());
  }
}

const Sort& need_seq(const Term& t, const char* sym) {
  if (!t.sort().is_seq()) {
    sort_error(std::string(sym) + " expects a sequence, got " +
               t.sort().to_string());
  }
  return t.sort();
}

void need_same(const Sort& a, const Sort& b, const char* sym) {
  if (!(a == b)) {
    sort_error(std::string(sym) + ": expected " + a.to_string() + ", got " +
               b.to_string());
  }
}

void check_arity(SymbolId sym, size_t n) {
  const SymbolDecl& d = symbol_decl(sym);
  bool ok = n >= static_cast<size_t>(d.min_arity) &&
            (d.max_arity < 0 || n <= static_cast<size_t>(d.max_arity));
  if (!ok) {
    throw SeqkitError(ErrorKind::ArityMismatch,
                      std::string(d.name) + " applied to " +
                          std::to_string(n) + " arguments (signature: " +
                          d.sort_shape + ")");
  }
}

// Result sort of a signature application; the single source of the
// schematic typing rules. `empty_sort` carries the annotation of a
// seq.empty occurrence.
Sort app_sort(SymbolId sym, const std::vector<Term>& args,
              const Sort& empty_sort) {
  check_arity(sym, args.size());
  const char* nm = symbol_name(sym);
  switch (sym) {
    case SymbolId::SeqEmpty: {
      if (!empty_sort.is_seq())
        sort_error("seq.empty needs a (Seq _) annotation");
      return empty_sort;
    }
    case SymbolId::SeqConst: {
      need_int(args[0], "seq.const length");
      if (args[1].sort().is_fn()) sort_error("seq.const of a function sort");
      return Sort::seq(args[1].sort());
    }
    case SymbolId::SeqUnit: {
      if (args[0].sort().is_fn()) sort_error("seq.unit of a function sort");
      return Sort::seq(args[0].sort());
    }
    case SymbolId::SeqLen:
    case SymbolId::ArrcLength:
      need_seq(args[0], nm);
      return Sort::integer();
    case SymbolId::SeqGet:
    case SymbolId::ArrcNth: {
      const Sort& s = need_seq(args[0], nm);
      need_int(args[1], "index");
      return s.seq_elem();
    }
    case SymbolId::SeqSet: {
      const Sort& s = need_seq(args[0], nm);
      need_int(args[1], "index");
      need_same(s.seq_elem(), args[2].sort(), nm);
      return s;
    }
    case SymbolId::SeqSlice:
    case SymbolId::ArrcSlice: {
      const Sort& s = need_seq(args[0], nm);
      need_int(args[1], "index");
      need_int(args[2], "index");
      return s;
    }
    case SymbolId::SeqConcat: {
      const Sort& s = need_seq(args[0], nm);
      for (size_t i = 1; i < args.size(); ++i)
        need_same(s, args[i].sort(), nm);
      return s;
    }
    case SymbolId::SeqAt: {
      const Sort& s = need_seq(args[0], nm);
      need_int(args[1], "index");
      return s;
    }
    case SymbolId::SeqContains:
    case SymbolId::SeqPrefixof:
    case SymbolId::SeqSuffixof: {
      const Sort& s = need_seq(args[0], nm);
      need_same(s, args[1].sort(), nm);
      return Sort::boolean();
    }
    case SymbolId::SeqReplace:
    case SymbolId::SeqReplaceAll: {
      const Sort& s = need_seq(args[0], nm);
      need_same(s, args[1].sort(), nm);
      need_same(s, args[2].sort(), nm);
      return s;
    }
    case SymbolId::SeqIndexof: {
      const Sort& s = need_seq(args[0], nm);
      need_same(s, args[1].sort(), nm);
      if (args.size() == 3) need_int(args[2], "start index");
      return Sort::integer();
    }
    case SymbolId::SeqRev:
      return need_seq(args[0], nm);
    case SymbolId::SeqUpdate: {
      const Sort& s = need_seq(args[0], nm);
      need_int(args[1], "index");
      need_same(s, args[2].sort(), nm);
      return s;
    }
    case SymbolId::SeqMap:
    case SymbolId::ArrcMap: {
      const Sort& f = args[0].sort();
      if (!f.is_fn()) sort_error(std::string(nm) + " expects a function first");
      size_t n = args.size() - 1;
      if (f.fn_args().size() != n)
        throw SeqkitError(ErrorKind::ArityMismatch,
                          std::string(nm) + ": function arity " +
                              std::to_string(f.fn_args().size()) + " but " +
                              std::to_string(n) + " sequences");
      for (size_t i = 0; i < n; ++i) {
        const Sort& s = need_seq(args[1 + i], nm);
        need_same(f.fn_args()[i], s.seq_elem(), nm);
      }
      return Sort::seq(f.fn_ret());
    }
    case SymbolId::SeqMapi: {
      const Sort& f = args[0].sort();
      if (!f.is_fn()) sort_error("seq.mapi expects a function first");
      need_int(args[1], "offset");
      size_t n = args.size() - 2;
      if (f.fn_args().size() != n + 1 || !f.fn_args()[0].is_int())
        throw SeqkitError(ErrorKind::ArityMismatch,
                          "seq.mapi: function must take Int then one "
                          "argument per sequence");
      for (size_t i = 0; i < n; ++i) {
        const Sort& s = need_seq(args[2 + i], nm);
        need_same(f.fn_args()[1 + i], s.seq_elem(), nm);
      }
      return Sort::seq(f.fn_ret());
    }
    case SymbolId::SeqFoldLeft: {
      const Sort& f = args[0].sort();
      if (!f.is_fn() || f.fn_args().size() != 2)
        sort_error("seq.fold_left expects a binary function first");
      const Sort& acc = args[1].sort();
      const Sort& s = need_seq(args[2], nm);
      need_same(f.fn_args()[0], acc, nm);
      need_same(f.fn_args()[1], s.seq_elem(), nm);
      need_same(f.fn_ret(), acc, nm);
      return acc;
    }
    case SymbolId::SeqFoldLefti: {
      const Sort& f = args[0].sort();
      if (!f.is_fn() || f.fn_args().size() != 3 || !f.fn_args()[0].is_int())
        sort_error("seq.fold_lefti expects a function Int b a -> b first");
      need_int(args[1], "offset");
      const Sort& acc = args[2].sort();
      const Sort& s = need_seq(args[3], nm);
      need_same(f.fn_args()[1], acc, nm);
      need_same(f.fn_args()[2], s.seq_elem(), nm);
      need_same(f.fn_ret(), acc, nm);
      return acc;
    }
    case SymbolId::SeqGetDefault: {
      const Sort& s = need_seq(args[0], nm);
      need_int(args[1], "index");
      need_same(s.seq_elem(), args[2].sort(), nm);
      return s.seq_elem();
    }
    case SymbolId::ArrcRepeat: {
      if (args[0].sort().is_fn()) sort_error("arrc.repeat of a function sort");
      need_int(args[1], "count");
      return Sort::seq(args[0].sort());
    }
    case SymbolId::ArrcApp: {
      const Sort& s = need_seq(args[0], nm);
      need_same(s, args[1].sort(), nm);
      return s;
    }
    case SymbolId::ArrcUpdate: {
      need_int(args[0], "index");
      const Sort& s = need_seq(args[1], nm);
      need_same(s.seq_elem(), args[2].sort(), nm);
      return s;
    }
  }
  throw SeqkitError(ErrorKind::UnknownSymbol, "unhandled symbol");
}

}  // namespace

namespace mk {

Term var(std::string name, Sort sort) {
  if (sort.is_null())
    throw SeqkitError(ErrorKind::UnsortedVariable, "variable without a sort");
  TermBuilder::Node n{TermKind::Var, std::move(sort), std::move(name)};
  return TermBuilder::make(std::move(n));
}

Term int_lit(long long v) {
  TermBuilder::Node n{TermKind::IntLit, Sort::integer()};
  n.ival = v;
  return TermBuilder::make(std::move(n));
}

Term bool_lit(bool v) {
  TermBuilder::Node n{TermKind::BoolLit, Sort::boolean()};
  n.bval = v;
  return TermBuilder::make(std::move(n));
}

Term elem_lit(Sort elem_sort, int index) {
  if (!elem_sort.is_elem())
    sort_error("element literals need a declared element sort");
  if (index < 0) sort_error("element literal index must be non-negative");
  TermBuilder::Node n{TermKind::ElemLit, std::move(elem_sort)};
  n.elem_index = index;
  return TermBuilder::make(std::move(n));
}

Term empty(Sort elem_sort) {
  TermBuilder::Node n{TermKind::App, Sort::seq(std::move(elem_sort))};
  n.sym = SymbolId::SeqEmpty;
  return TermBuilder::make(std::move(n));
}

Term app(SymbolId sym, std::vector<Term> args) {
  if (sym == SymbolId::SeqEmpty)
    throw SeqkitError(ErrorKind::SortMismatch,
                      "seq.empty is built with mk::empty(elem_sort)");
  Sort s = app_sort(sym, args, Sort());
  TermBuilder::Node n{TermKind::App, std::move(s)};
  n.sym = sym;
  n.args = std::move(args);
  return TermBuilder::make(std::move(n));
}

Term fn_apply(Term fn, std::vector<Term> args) {
  const Sort& fs = fn.sort();
  if (!fs.is_fn())
    sort_error("application head is not function-sorted: " + fs.to_string());
  if (fs.fn_args().size() != args.size())
    throw SeqkitError(ErrorKind::ArityMismatch,
                      "function expects " +
                          std::to_string(fs.fn_args().size()) +
                          " arguments, got " + std::to_string(args.size()));
  for (size_t i = 0; i < args.size(); ++i)
    need_same(fs.fn_args()[i], args[i].sort(), "apply");
  TermBuilder::Node n{TermKind::FnApply, fs.fn_ret()};
  n.args.reserve(args.size() + 1);
  n.args.push_back(std::move(fn));
  for (auto& a : args) n.args.push_back(std::move(a));
  return TermBuilder::make(std::move(n));
}

Term ite(Term cond, Term then_t, Term else_t) {
  need_bool(cond, "ite condition");
  need_same(then_t.sort(), else_t.sort(), "ite");
  if (then_t.sort().is_fn()) sort_error("ite over function sorts");
  TermBuilder::Node n{TermKind::Ite, then_t.sort()};
  n.args = {std::move(cond), std::move(then_t), std::move(else_t)};
  return TermBuilder::make(std::move(n));
}

Term let_(std::string binder, Term bound, Term body) {
  TermBuilder::Node n{TermKind::Let, body.sort(), std::move(binder)};
  n.args = {std::move(bound), std::move(body)};
  return TermBuilder::make(std::move(n));
}

Term forall(std::string binder, Term body) {
  need_bool(body, "forall body");
  TermBuilder::Node n{TermKind::Forall, Sort::boolean(), std::move(binder)};
  n.args = {std::move(body)};
  return TermBuilder::make(std::move(n));
}

Term eq(Term a, Term b) {
  need_same(a.sort(), b.sort(), "=");
  if (a.sort().is_fn()) sort_error("cannot compare function sorts");
  TermBuilder::Node n{TermKind::Eq, Sort::boolean()};
  n.args = {std::move(a), std::move(b)};
  return TermBuilder::make(std::move(n));
}

namespace {
Term connective(TermKind kind, std::vector<Term> xs, bool empty_value) {
  if (xs.empty()) return bool_lit(empty_value);
  if (xs.size() == 1) return xs[0];
  for (const auto& x : xs) need_bool(x, "connective argument");
  TermBuilder::Node n{kind, Sort::boolean()};
  n.args = std::move(xs);
  return TermBuilder::make(std::move(n));
}
}  // namespace

Term and_(std::vector<Term> xs) {
  return connective(TermKind::And, std::move(xs), true);
}
Term or_(std::vector<Term> xs) {
  return connective(TermKind::Or, std::move(xs), false);
}

Term not_(Term a) {
  need_bool(a, "not argument");
  TermBuilder::Node n{TermKind::Not, Sort::boolean()};
  n.args = {std::move(a)};
  return TermBuilder::make(std::move(n));
}

Term implies(Term a, Term b) {
  need_bool(a, "=> argument");
  need_bool(b, "=> argument");
  TermBuilder::Node n{TermKind::Implies, Sort::boolean()};
  n.args = {std::move(a), std::move(b)};
  return TermBuilder::make(std::move(n));
}

namespace {
Term int_rel(TermKind kind, Term a, Term b, const Sort& result) {
  need_int(a, "arithmetic argument");
  need_int(b, "arithmetic argument");
  TermBuilder::Node n{kind, result};
  n.args = {std::move(a), std::move(b)};
  return TermBuilder::make(std::move(n));
}
}  // namespace

Term le(Term a, Term b) {
  return int_rel(TermKind::Le, std::move(a), std::move(b), Sort::boolean());
}
Term lt(Term a, Term b) {
  return int_rel(TermKind::Lt, std::move(a), std::move(b), Sort::boolean());
}
Term add(Term a, Term b) {
  return int_rel(TermKind::Add, std::move(a), std::move(b), Sort::integer());
}
Term sub(Term a, Term b) {
  return int_rel(TermKind::Sub, std::move(a), std::move(b), Sort::integer());
}

Term mul(Term a, Term b) {
  if (a.kind() != TermKind::IntLit && b.kind() != TermKind::IntLit)
    sort_error("multiplication needs a literal coefficient");
  return int_rel(TermKind::Mul, std::move(a), std::move(b), Sort::integer());
}

Term len(Term s) { return app(SymbolId::SeqLen, {std::move(s)}); }
Term get(Term s, Term i) {
  return app(SymbolId::SeqGet, {std::move(s), std::move(i)});
}
Term set(Term s, Term i, Term v) {
  return app(SymbolId::SeqSet, {std::move(s), std::move(i), std::move(v)});
}
Term unit(Term v) { return app(SymbolId::SeqUnit, {std::move(v)}); }
Term const_(Term l, Term v) {
  return app(SymbolId::SeqConst, {std::move(l), std::move(v)});
}
Term slice(Term s, Term i, Term j) {
  return app(SymbolId::SeqSlice, {std::move(s), std::move(i), std::move(j)});
}
Term concat(std::vector<Term> ss) {
  return app(SymbolId::SeqConcat, std::move(ss));
}
Term at(Term s, Term i) {
  return app(SymbolId::SeqAt, {std::move(s), std::move(i)});
}
Term update(Term s1, Term i, Term s2) {
  return app(SymbolId::SeqUpdate, {std::move(s1), std::move(i), std::move(s2)});
}

}  // namespace mk

namespace {

void free_vars_into(const Term& t, std::set<std::string>& bound, SortEnv& out) {
  switch (t.kind()) {
    case TermKind::Var: {
      if (bound.count(t.name())) return;
      auto it = out.find(t.name());
      if (it == out.end()) {
        out.emplace(t.name(), t.sort());
      } else if (!(it->second == t.sort())) {
        throw SeqkitError(ErrorKind::SortMismatch,
                          "variable " + t.name() + " used at both " +
                              it->second.to_string() + " and " +
                              t.sort().to_string());
      }
      return;
    }
    case TermKind::Let: {
      free_vars_into(t.child(0), bound, out);
      bool was_bound = bound.count(t.name()) > 0;
      bound.insert(t.name());
      free_vars_into(t.child(1), bound, out);
      if (!was_bound) bound.erase(t.name());
      return;
    }
    case TermKind::Forall: {
      bool was_bound = bound.count(t.name()) > 0;
      bound.insert(t.name());
      free_vars_into(t.child(0), bound, out);
      if (!was_bound) bound.erase(t.name());
      return;
    }
    default:
      for (const auto& a : t.args()) free_vars_into(a, bound, out);
  }
}

Sort check_sorts(const Term& t, const SortEnv* env, SortEnv& locals);

Sort rebuild_app_sort(const Term& t, const SortEnv* env, SortEnv& locals) {
  for (const auto& a : t.args()) check_sorts(a, env, locals);
  if (t.symbol() == SymbolId::SeqEmpty) return t.sort();
  // Re-derive from the argument sorts; args() carry checked sorts.
  return app_sort(t.symbol(), t.args(), Sort());
}

Sort check_sorts(const Term& t, const SortEnv* env, SortEnv& locals) {
  switch (t.kind()) {
    case TermKind::Var: {
      auto lit = locals.find(t.name());
      if (lit != locals.end()) {
        if (!(lit->second == t.sort()))
          throw SeqkitError(ErrorKind::SortMismatch,
                            "bound variable " + t.name() + " expected " +
                                lit->second.to_string());
        return t.sort();
      }
      if (env) {
        auto it = env->find(t.name());
        if (it == env->end())
          throw SeqkitError(ErrorKind::UnsortedVariable,
                            "variable " + t.name() + " not bound in the environment");
        if (!(it->second == t.sort()))
          throw SeqkitError(ErrorKind::SortMismatch,
                            "variable " + t.name() + " has sort " +
                                t.sort().to_string() + " but the environment binds " +
                                it->second.to_string());
      }
      return t.sort();
    }
    case TermKind::IntLit:
    case TermKind::BoolLit:
    case TermKind::ElemLit:
      return t.sort();
    case TermKind::App:
      return rebuild_app_sort(t, env, locals);
    case TermKind::FnApply: {
      Sort f = check_sorts(t.child(0), env, locals);
      if (!f.is_fn())
        throw SeqkitError(ErrorKind::SortMismatch,
                          "application head is not a function");
      for (size_t i = 1; i < t.num_children(); ++i) {
        Sort a = check_sorts(t.child(i), env, locals);
        if (!(a == f.fn_args()[i - 1]))
          throw SeqkitError(ErrorKind::SortMismatch,
                            "function argument sort mismatch");
      }
      return f.fn_ret();
    }
    case TermKind::Ite: {
      check_sorts(t.child(0), env, locals);
      Sort a = check_sorts(t.child(1), env, locals);
      Sort b = check_sorts(t.child(2), env, locals);
      if (!(a == b))
        throw SeqkitError(ErrorKind::SortMismatch, "ite branches disagree");
      return a;
    }
    case TermKind::Let: {
      Sort bound = check_sorts(t.child(0), env, locals);
      auto saved = locals.find(t.name()) != locals.end()
                       ? std::optional<Sort>(locals[t.name()])
                       : std::nullopt;
      locals[t.name()] = bound;
      Sort body = check_sorts(t.child(1), env, locals);
      if (saved) locals[t.name()] = *saved; else locals.erase(t.name());
      return body;
    }
    case TermKind::Forall: {
      auto saved = locals.find(t.name()) != locals.end()
                       ? std::optional<Sort>(locals[t.name()])
                       : std::nullopt;
      locals[t.name()] = Sort::integer();
      Sort body = check_sorts(t.child(0), env, locals);
      if (saved) locals[t.name()] = *saved; else locals.erase(t.name());
      if (!body.is_bool())
        throw SeqkitError(ErrorKind::SortMismatch, "forall body must be Bool");
      return Sort::boolean();
    }
    default: {
      for (const auto& a : t.args()) check_sorts(a, env, locals);
      return t.sort();
    }
  }
}

}  // namespace

Sort sort_of(const Term& t, const SortEnv& env) {
  SortEnv locals;
  return check_sorts(t, &env, locals);
}

Sort sort_of(const Term& t) {
  SortEnv locals;
  return check_sorts(t, nullptr, locals);
}

SortEnv free_vars(const Term& t) {
  SortEnv out;
  std::set<std::string> bound;
  free_vars_into(t, bound, out);
  return out;
}

namespace {

Term substitute_rec(const Term& t, const std::map<std::string, Term>& subst,
                    std::set<std::string>& bound, int& rename_counter);

Term rebuild(const Term& t, std::vector<Term> children) {
  switch (t.kind()) {
    case TermKind::App:
      if (t.symbol() == SymbolId::SeqEmpty) return t;
      return mk::app(t.symbol(), std::move(children));
    case TermKind::FnApply: {
      Term fn = children[0];
      children.erase(children.begin());
      return mk::fn_apply(std::move(fn), std::move(children));
    }
    case TermKind::Ite:
      return mk::ite(children[0], children[1], children[2]);
    case TermKind::Eq:
      return mk::eq(children[0], children[1]);
    case TermKind::And:
      return mk::and_(std::move(children));
    case TermKind::Or:
      return mk::or_(std::move(children));
    case TermKind::Not:
      return mk::not_(children[0]);
    case TermKind::Implies:
      return mk::implies(children[0], children[1]);
    case TermKind::Le:
      return mk::le(children[0], children[1]);
    case TermKind::Lt:
      return mk::lt(children[0], children[1]);
    case TermKind::Add:
      return mk::add(children[0], children[1]);
    case TermKind::Sub:
      return mk::sub(children[0], children[1]);
    case TermKind::Mul:
      return mk::mul(children[0], children[1]);
    default:
      throw SeqkitError(ErrorKind::SortMismatch, "rebuild: unexpected kind");
  }
}

bool appears_free_in_any(const std::string& name,
                         const std::map<std::string, Term>& subst,
                         const Term& body) {
  // Whether `name` could be captured: it must appear free in some
  // replacement whose variable occurs free in body.
  SortEnv body_free = free_vars(body);
  for (const auto& [var, rep] : subst) {
    if (!body_free.count(var)) continue;
    if (free_vars(rep).count(name)) return true;
  }
  return false;
}

Term substitute_binder(const Term& t, const std::map<std::string, Term>& subst,
                       std::set<std::string>& bound, int& rename_counter) {
  bool is_let = t.kind() == TermKind::Let;
  const Term& body = is_let ? t.child(1) : t.child(0);
  std::string binder = t.name();
  Term new_bound_term;
  if (is_let)
    new_bound_term = substitute_rec(t.child(0), subst, bound, rename_counter);

  std::map<std::string, Term> inner = subst;
  inner.erase(binder);

  Term new_body = body;
  std::string new_binder = binder;
  if (!inner.empty() && appears_free_in_any(binder, inner, body)) {
    // Capture: rename the binder before substituting.
    do {
      new_binder = binder + "!" + std::to_string(rename_counter++);
    } while (free_vars(body).count(new_binder) || inner.count(new_binder));
    Sort binder_sort = is_let ? t.child(0).sort() : Sort::integer();
    std::map<std::string, Term> rename{
        {binder, mk::var(new_binder, binder_sort)}};
    std::set<std::string> none;
    new_body = substitute_rec(body, rename, none, rename_counter);
  }
  if (!inner.empty())
    new_body = substitute_rec(new_body, inner, bound, rename_counter);

  if (is_let) return mk::let_(new_binder, new_bound_term, new_body);
  return mk::forall(new_binder, new_body);
}

Term substitute_rec(const Term& t, const std::map<std::string, Term>& subst,
                    std::set<std::string>& bound, int& rename_counter) {
  switch (t.kind()) {
    case TermKind::Var: {
      auto it = subst.find(t.name());
      if (it == subst.end()) return t;
      if (!(it->second.sort() == t.sort()))
        throw SeqkitError(ErrorKind::SortMismatch,
                          "substituting " + t.name() + " : " +
                              t.sort().to_string() + " with a term of sort " +
                              it->second.sort().to_string());
      return it->second;
    }
    case TermKind::IntLit:
    case TermKind::BoolLit:
    case TermKind::ElemLit:
      return t;
    case TermKind::Let:
    case TermKind::Forall:
      return substitute_binder(t, subst, bound, rename_counter);
    default: {
      std::vector<Term> children;
      children.reserve(t.num_children());
      bool changed = false;
      for (const auto& a : t.args()) {
        Term c = substitute_rec(a, subst, bound, rename_counter);
        if (!(c == a)) changed = true;
        children.push_back(std::move(c));
      }
      if (!changed) return t;
      return rebuild(t, std::move(children));
    }
  }
}

}  // namespace

Term substitute(const Term& t, const std::map<std::string, Term>& subst) {
  if (subst.empty()) return t;
  std::set<std::string> bound;
  int rename_counter = 0;
  return substitute_rec(t, subst, bound, rename_counter);
}

Term eliminate_lets(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::IntLit:
    case TermKind::BoolLit:
    case TermKind::ElemLit:
      return t;
    case TermKind::Let: {
      Term bound = eliminate_lets(t.child(0));
      Term body = eliminate_lets(t.child(1));
      return substitute(body, {{t.name(), bound}});
    }
    case TermKind::Forall: {
      Term body = eliminate_lets(t.child(0));
      if (body == t.child(0)) return t;
      return mk::forall(t.name(), body);
    }
    default: {
      std::vector<Term> children;
      children.reserve(t.num_children());
      bool changed = false;
      for (const auto& a : t.args()) {
        Term c = eliminate_lets(a);
        if (!(c == a)) changed = true;
        children.push_back(std::move(c));
      }
      if (!changed) return t;
      return rebuild(t, std::move(children));
    }
  }
}

std::string fresh_name(const std::string& base, const std::vector<Term>& avoid) {
  std::set<std::string> used;
  for (const auto& t : avoid) {
    if (t.is_null()) continue;
    for (const auto& kv : free_vars(t)) used.insert(kv.first);
  }
  if (!used.count(base)) return base;
  for (int i = 0;; ++i) {
    std::string cand = base + "!" + std::to_string(i);
    if (!used.count(cand)) return cand;
  }
}

}  // namespace seqkit
