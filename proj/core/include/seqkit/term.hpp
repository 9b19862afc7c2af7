#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "seqkit/signature.hpp"
#include "seqkit/sort.hpp"

namespace seqkit {

enum class TermKind {
  Var,
  IntLit,
  BoolLit,
  ElemLit,
  App,      // application of a signature symbol
  FnApply,  // application of a function-sorted term (args[0] is the function)
  Ite,
  Let,     // single binder; name() is the binder, args: {bound, body}
  Forall,  // Int binder only; name() is the binder, args: {body}
  Eq,
  And,
  Or,
  Not,
  Implies,
  Le,
  Lt,
  Add,
  Sub,
  Mul,  // one side must be an integer literal
};

// Immutable shared term. Nodes carry their sort, computed and checked at
// construction time by the mk:: factories.
class Term {
 public:
  Term() = default;

  bool is_null() const { return node_ == nullptr; }
  TermKind kind() const;
  const Sort& sort() const;

  const std::string& name() const;  // Var, Let, Forall
  long long int_value() const;      // IntLit
  bool bool_value() const;          // BoolLit
  int elem_index() const;           // ElemLit; sort() is the element sort
  SymbolId symbol() const;          // App
  const std::vector<Term>& args() const;

  const Term& child(size_t i) const { return args()[i]; }
  size_t num_children() const { return args().size(); }

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend struct TermBuilder;
};

namespace mk {

Term var(std::string name, Sort sort);
Term int_lit(long long v);
Term bool_lit(bool v);
Term elem_lit(Sort elem_sort, int index);

// seq.empty needs its sequence sort supplied; all other applications infer
// their sort from the arguments.
Term empty(Sort elem_sort);
Term app(SymbolId sym, std::vector<Term> args);
Term fn_apply(Term fn, std::vector<Term> args);

Term ite(Term cond, Term then_t, Term else_t);
Term let_(std::string binder, Term bound, Term body);
Term forall(std::string binder, Term body);
Term eq(Term a, Term b);
Term and_(std::vector<Term> xs);  // empty -> true, singleton -> the element
Term or_(std::vector<Term> xs);   // empty -> false, singleton -> the element
Term not_(Term a);
Term implies(Term a, Term b);
Term le(Term a, Term b);
Term lt(Term a, Term b);
Term add(Term a, Term b);
Term sub(Term a, Term b);
Term mul(Term a, Term b);

// Convenience builders for the common sequence applications.
Term len(Term s);
Term get(Term s, Term i);
Term set(Term s, Term i, Term v);
Term unit(Term v);
Term const_(Term l, Term v);
Term slice(Term s, Term i, Term j);
Term concat(std::vector<Term> ss);
Term at(Term s, Term i);
Term update(Term s1, Term i, Term s2);

}  // namespace mk

// Sort of t, re-derived from scratch. The env must bind every free variable
// of t to its sort; a missing binding raises UnsortedVariable and a
// conflicting one raises SortMismatch.
Sort sort_of(const Term& t, const SortEnv& env);
// Same derivation using the sorts recorded on the Var nodes themselves.
Sort sort_of(const Term& t);

// Free variables with their sorts. Two free occurrences of one name with
// different sorts raise SortMismatch.
SortEnv free_vars(const Term& t);

// Capture-avoiding substitution of free variables. Each replacement must
// match the variable's sort.
Term substitute(const Term& t, const std::map<std::string, Term>& subst);

// Expands every Let by substituting the bound term into the body.
Term eliminate_lets(const Term& t);

// A name not free in any of the given terms, derived from base.
std::string fresh_name(const std::string& base, const std::vector<Term>& avoid);

}  // namespace seqkit
