#include "seqkit/axioms.hpp"

#include <algorithm>
#include <functional>

#include "seqkit/error.hpp"

namespace seqkit {

const char* to_string(SchemaName name) {
  switch (name) {
    case SchemaName::Set: return "set";
    case SchemaName::Const: return "const";
    case SchemaName::Slice: return "slice";
    case SchemaName::UpdateProposal: return "update_proposal";
    case SchemaName::UpdateCvc5: return "update_cvc5";
    case SchemaName::Map: return "map";
    case SchemaName::Mapi: return "mapi";
    case SchemaName::SelectOverStore: return "select_over_store";
  }
  return "?";
}

bool schema_from_string(const std::string& name, SchemaName& out) {
  static const std::pair<const char*, SchemaName> table[] = {
      {"set", SchemaName::Set},
      {"const", SchemaName::Const},
      {"slice", SchemaName::Slice},
      {"update_proposal", SchemaName::UpdateProposal},
      {"update_cvc5", SchemaName::UpdateCvc5},
      {"map", SchemaName::Map},
      {"mapi", SchemaName::Mapi},
      {"select_over_store", SchemaName::SelectOverStore},
  };
  for (const auto& [n, v] : table) {
    if (name == n) {
      out = v;
      return true;
    }
  }
  return false;
}

namespace {

[[noreturn]] void bad_holes(SchemaName name, const std::string& msg) {
  throw SeqkitError(ErrorKind::SortMismatch,
                    std::string(to_string(name)) + " schema: " + msg);
}

void need_holes(SchemaName name, const std::vector<Term>& holes, size_t n) {
  if (holes.size() != n)
    bad_holes(name, "expected " + std::to_string(n) + " holes, got " +
                        std::to_string(holes.size()));
}

const Sort& need_seq_hole(SchemaName name, const Term& t, const char* what) {
  if (!t.sort().is_seq())
    bad_holes(name, std::string(what) + " must be a sequence");
  return t.sort();
}

void need_int_hole(SchemaName name, const Term& t, const char* what) {
  if (!t.sort().is_int())
    bad_holes(name, std::string(what) + " must be an Int");
}

Term ite_max0(const Term& x) {
  return mk::ite(mk::le(mk::int_lit(0), x), x, mk::int_lit(0));
}

Term ite_min(const Term& a, const Term& b) {
  return mk::ite(mk::le(a, b), a, b);
}

Term in_range(const Term& lo, const Term& x, const Term& hi_excl) {
  return mk::and_({mk::le(lo, x), mk::lt(x, hi_excl)});
}

// Binds the output hole to a fresh name when it is compound, so the
// surrounding formula evaluates the operator once.
Term bind_output(const std::vector<Term>& holes, const Term& out,
                 const std::function<Term(const Term&)>& body) {
  if (out.kind() == TermKind::Var) return body(out);
  std::vector<Term> avoid = holes;
  std::string name = fresh_name("out", avoid);
  Term v = mk::var(name, out.sort());
  return mk::let_(name, out, body(v));
}

Term build_set(const std::vector<Term>& holes) {
  const Term& s1 = holes[0];
  const Term& i = holes[1];
  const Term& v = holes[2];
  const Sort& ss = need_seq_hole(SchemaName::Set, s1, "s1");
  need_int_hole(SchemaName::Set, i, "i");
  if (!(v.sort() == ss.seq_elem())) bad_holes(SchemaName::Set, "v sort");
  if (!(holes[3].sort() == ss)) bad_holes(SchemaName::Set, "output sort");
  std::string j = fresh_name("j", holes);
  Term jv = mk::var(j, Sort::integer());
  return bind_output(holes, holes[3], [&](const Term& s2) {
    return mk::and_(
        {mk::eq(mk::len(s2), mk::len(s1)),
         mk::forall(j, mk::implies(in_range(mk::int_lit(0), jv, mk::len(s1)),
                                   mk::eq(mk::get(s2, jv),
                                          mk::ite(mk::eq(jv, i), v,
                                                  mk::get(s1, jv)))))});
  });
}

Term build_const(const std::vector<Term>& holes) {
  const Term& l = holes[0];
  const Term& v = holes[1];
  need_int_hole(SchemaName::Const, l, "l");
  if (!holes[2].sort().is_seq() ||
      !(holes[2].sort().seq_elem() == v.sort()))
    bad_holes(SchemaName::Const, "output must be a sequence of v's sort");
  std::string i = fresh_name("i", holes);
  Term iv = mk::var(i, Sort::integer());
  return bind_output(holes, holes[2], [&](const Term& s) {
    return mk::ite(
        mk::le(l, mk::int_lit(0)), mk::eq(s, mk::empty(v.sort())),
        mk::and_({mk::eq(mk::len(s), l),
                  mk::forall(i, mk::implies(in_range(mk::int_lit(0), iv, l),
                                            mk::eq(mk::get(s, iv), v)))}));
  });
}

// Guarded on the clamped window i' <= j': the raw guard i <= j admits
// clamped-empty corners (i <= j but max(i,0) > min(j, len-1)) that would
// force a negative length on the main branch.
Term build_slice(const std::vector<Term>& holes) {
  const Term& s1 = holes[0];
  const Term& i = holes[1];
  const Term& j = holes[2];
  const Sort& ss = need_seq_hole(SchemaName::Slice, s1, "s1");
  need_int_hole(SchemaName::Slice, i, "i");
  need_int_hole(SchemaName::Slice, j, "j");
  if (!(holes[3].sort() == ss)) bad_holes(SchemaName::Slice, "output sort");
  std::string k = fresh_name("k", holes);
  Term kv = mk::var(k, Sort::integer());
  std::vector<Term> avoid = holes;
  std::string ip = fresh_name("ic", avoid);
  avoid.push_back(mk::var(ip, Sort::integer()));
  std::string jp = fresh_name("jc", avoid);
  Term ipv = mk::var(ip, Sort::integer());
  Term jpv = mk::var(jp, Sort::integer());
  return bind_output(holes, holes[3], [&](const Term& s2) {
    Term main = mk::and_(
        {mk::eq(mk::len(s2), mk::add(mk::sub(jpv, ipv), mk::int_lit(1))),
         mk::forall(k,
                    mk::implies(mk::and_({mk::le(ipv, kv), mk::le(kv, jpv)}),
                                mk::eq(mk::get(s2, mk::sub(kv, ipv)),
                                       mk::get(s1, kv))))});
    Term body = mk::ite(mk::le(ipv, jpv), main, mk::eq(s2, mk::empty(ss.seq_elem())));
    Term with_jp =
        mk::let_(jp, ite_min(j, mk::sub(mk::len(s1), mk::int_lit(1))), body);
    return mk::let_(ip, ite_max0(i), with_jp);
  });
}

Term build_update(SchemaName name, const std::vector<Term>& holes) {
  const Term& s1 = holes[0];
  const Term& i = holes[1];
  const Term& s2 = holes[2];
  const Sort& ss = need_seq_hole(name, s1, "s1");
  need_int_hole(name, i, "i");
  if (!(s2.sort() == ss)) bad_holes(name, "s2 sort");
  if (!(holes[3].sort() == ss)) bad_holes(name, "output sort");
  std::string j = fresh_name("j", holes);
  Term jv = mk::var(j, Sort::integer());
  return bind_output(holes, holes[3], [&](const Term& s) {
    Term writes = mk::forall(
        j, mk::implies(
               in_range(mk::int_lit(0), jv, mk::len(s1)),
               mk::eq(mk::get(s, jv),
                      mk::ite(mk::and_({mk::le(i, jv),
                                        mk::lt(jv, mk::add(i, mk::len(s2)))}),
                              mk::get(s2, mk::sub(jv, i)),
                              mk::get(s1, jv)))));
    Term len_eq = mk::eq(mk::len(s), mk::len(s1));
    if (name == SchemaName::UpdateProposal)
      return mk::and_({len_eq, writes});
    return mk::and_(
        {len_eq, mk::ite(in_range(mk::int_lit(0), i, mk::len(s1)), writes,
                         mk::eq(s, s1))});
  });
}

// Shortest input length as nested ite-min, let-bound to `k`.
Term let_k(const std::string& k, const std::vector<Term>& seqs, Term body) {
  Term expr = mk::len(seqs[0]);
  for (size_t m = 1; m < seqs.size(); ++m)
    expr = ite_min(expr, mk::len(seqs[m]));
  return mk::let_(k, expr, std::move(body));
}

Term build_map(const std::vector<Term>& holes) {
  if (holes.size() < 3) bad_holes(SchemaName::Map, "needs f, inputs, output");
  const Term& f = holes[0];
  if (!f.sort().is_fn()) bad_holes(SchemaName::Map, "f must be a function");
  size_t n = holes.size() - 2;
  if (f.sort().fn_args().size() != n)
    bad_holes(SchemaName::Map, "f arity does not match the sequence count");
  std::vector<Term> seqs(holes.begin() + 1, holes.end() - 1);
  for (size_t m = 0; m < n; ++m) {
    const Sort& sm = need_seq_hole(SchemaName::Map, seqs[m], "input");
    if (!(sm.seq_elem() == f.sort().fn_args()[m]))
      bad_holes(SchemaName::Map, "input element sort");
  }
  if (!holes.back().sort().is_seq() ||
      !(holes.back().sort().seq_elem() == f.sort().fn_ret()))
    bad_holes(SchemaName::Map, "output must be a sequence of f's result sort");
  std::string k = fresh_name("k", holes);
  Term kv = mk::var(k, Sort::integer());
  std::string t = fresh_name("t", holes);
  Term tv = mk::var(t, Sort::integer());
  return bind_output(holes, holes.back(), [&](const Term& s) {
    std::vector<Term> fargs;
    for (const auto& sm : seqs) fargs.push_back(mk::get(sm, tv));
    Term body = mk::and_(
        {mk::eq(mk::len(s), kv),
         mk::forall(t, mk::implies(in_range(mk::int_lit(0), tv, kv),
                                   mk::eq(mk::get(s, tv),
                                          mk::fn_apply(f, fargs))))});
    return let_k(k, seqs, body);
  });
}

Term build_mapi(const std::vector<Term>& holes) {
  if (holes.size() < 4)
    bad_holes(SchemaName::Mapi, "needs f, o, inputs, output");
  const Term& f = holes[0];
  const Term& o = holes[1];
  if (!f.sort().is_fn()) bad_holes(SchemaName::Mapi, "f must be a function");
  need_int_hole(SchemaName::Mapi, o, "o");
  size_t n = holes.size() - 3;
  if (f.sort().fn_args().size() != n + 1 ||
      !f.sort().fn_args()[0].is_int())
    bad_holes(SchemaName::Mapi, "f must take Int then one value per sequence");
  std::vector<Term> seqs(holes.begin() + 2, holes.end() - 1);
  for (size_t m = 0; m < n; ++m) {
    const Sort& sm = need_seq_hole(SchemaName::Mapi, seqs[m], "input");
    if (!(sm.seq_elem() == f.sort().fn_args()[m + 1]))
      bad_holes(SchemaName::Mapi, "input element sort");
  }
  const Sort& out_sort = holes.back().sort();
  if (!out_sort.is_seq() || !(out_sort.seq_elem() == f.sort().fn_ret()))
    bad_holes(SchemaName::Mapi, "output must be a sequence of f's result sort");
  std::string k = fresh_name("k", holes);
  Term kv = mk::var(k, Sort::integer());
  std::string t = fresh_name("t", holes);
  Term tv = mk::var(t, Sort::integer());
  return bind_output(holes, holes.back(), [&](const Term& s) {
    std::vector<Term> fargs{mk::add(o, tv)};
    for (const auto& sm : seqs) fargs.push_back(mk::get(sm, mk::add(o, tv)));
    // Positions run 0..k-o-1, consistent with the stated length k-o.
    Term body = mk::ite(
        mk::le(kv, o), mk::eq(s, mk::empty(out_sort.seq_elem())),
        mk::and_({mk::eq(mk::len(s), mk::sub(kv, o)),
                  mk::forall(t, mk::implies(
                                    in_range(mk::int_lit(0), tv,
                                             mk::sub(kv, o)),
                                    mk::eq(mk::get(s, tv),
                                           mk::fn_apply(f, fargs))))}));
    return let_k(k, seqs, body);
  });
}

Term build_select_over_store(const std::vector<Term>& holes) {
  const Term& s = holes[0];
  const Term& i = holes[1];
  const Term& v = holes[2];
  const Term& j = holes[3];
  const Sort& ss = need_seq_hole(SchemaName::SelectOverStore, s, "s");
  need_int_hole(SchemaName::SelectOverStore, i, "i");
  need_int_hole(SchemaName::SelectOverStore, j, "j");
  if (!(v.sort() == ss.seq_elem()))
    bad_holes(SchemaName::SelectOverStore, "v sort");
  Term read = mk::get(mk::set(s, i, v), j);
  Term hit = mk::and_({mk::eq(j, i), in_range(mk::int_lit(0), i, mk::len(s))});
  return mk::implies(in_range(mk::int_lit(0), j, mk::len(s)),
                     mk::eq(read, mk::ite(hit, v, mk::get(s, j))));
}

Term expand_foralls(const Term& t, long long lo, long long hi) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::IntLit:
    case TermKind::BoolLit:
    case TermKind::ElemLit:
      return t;
    case TermKind::Forall: {
      Term body = expand_foralls(t.child(0), lo, hi);
      std::vector<Term> conj;
      for (long long v = lo; v <= hi; ++v)
        conj.push_back(substitute(body, {{t.name(), mk::int_lit(v)}}));
      return mk::and_(std::move(conj));
    }
    default: {
      std::vector<Term> children;
      bool changed = false;
      for (const auto& a : t.args()) {
        Term c = expand_foralls(a, lo, hi);
        if (!(c == a)) changed = true;
        children.push_back(std::move(c));
      }
      if (!changed) return t;
      switch (t.kind()) {
        case TermKind::App:
          return t.symbol() == SymbolId::SeqEmpty
                     ? t
                     : mk::app(t.symbol(), std::move(children));
        case TermKind::FnApply: {
          Term fn = children[0];
          children.erase(children.begin());
          return mk::fn_apply(std::move(fn), std::move(children));
        }
        case TermKind::Ite:
          return mk::ite(children[0], children[1], children[2]);
        case TermKind::Let:
          return mk::let_(t.name(), children[0], children[1]);
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
          throw SeqkitError(ErrorKind::SortMismatch, "unexpected kind");
      }
    }
  }
}

}  // namespace

Term schema_term(SchemaName name, const std::vector<Term>& holes) {
  switch (name) {
    case SchemaName::Set:
      need_holes(name, holes, 4);
      return build_set(holes);
    case SchemaName::Const:
      need_holes(name, holes, 3);
      return build_const(holes);
    case SchemaName::Slice:
      need_holes(name, holes, 4);
      return build_slice(holes);
    case SchemaName::UpdateProposal:
    case SchemaName::UpdateCvc5:
      need_holes(name, holes, 4);
      return build_update(name, holes);
    case SchemaName::Map:
      return build_map(holes);
    case SchemaName::Mapi:
      return build_mapi(holes);
    case SchemaName::SelectOverStore:
      need_holes(name, holes, 4);
      return build_select_over_store(holes);
  }
  throw SeqkitError(ErrorKind::UnknownSchema, "unknown schema");
}

std::vector<GroundLemma> instantiate(const AxiomSchema& schema,
                                     const std::vector<Term>& holes,
                                     const Bounds& bounds) {
  bounds.validate();
  Term t = eliminate_lets(schema_term(schema.name, holes));

  long long lo = 0;
  long long hi = -1;
  switch (schema.name) {
    case SchemaName::Set:
    case SchemaName::Slice:
    case SchemaName::UpdateProposal:
    case SchemaName::UpdateCvc5:
    case SchemaName::Map:
      hi = bounds.max_len - 1;
      break;
    case SchemaName::Const:
      hi = bounds.int_hi - 1;
      break;
    case SchemaName::Mapi:
      hi = bounds.max_len - 1 - bounds.int_lo;
      break;
    case SchemaName::SelectOverStore:
      break;  // quantifier-free
  }

  if (hi >= lo && (bounds.int_lo > lo || bounds.int_hi < hi))
    throw SeqkitError(
        ErrorKind::WindowTooSmall,
        std::string(to_string(schema.name)) + " instances need indices [" +
            std::to_string(lo) + ", " + std::to_string(hi) +
            "] but the window is [" + std::to_string(bounds.int_lo) + ", " +
            std::to_string(bounds.int_hi) + "]");

  Term expanded = expand_foralls(t, lo, hi);
  std::string provenance = std::string(to_string(schema.name)) +
                           " schema, quantifiers expanded over [" +
                           std::to_string(lo) + ", " + std::to_string(hi) +
                           "]";
  return {GroundLemma{expanded, provenance}};
}

namespace {

std::vector<Term> holes_for(SchemaName name, int arity, const Sort& elem,
                            bool applied_output) {
  Sort seq = Sort::seq(elem);
  auto out = [&](Term applied, const char* var_name) {
    return applied_output ? applied : mk::var(var_name, applied.sort());
  };
  switch (name) {
    case SchemaName::Set: {
      Term s1 = mk::var("s1", seq), i = mk::var("i", Sort::integer()),
           v = mk::var("v", elem);
      return {s1, i, v, out(mk::set(s1, i, v), "s2")};
    }
    case SchemaName::Const: {
      Term l = mk::var("l", Sort::integer()), v = mk::var("v", elem);
      return {l, v, out(mk::const_(l, v), "s")};
    }
    case SchemaName::Slice: {
      Term s1 = mk::var("s1", seq), i = mk::var("i", Sort::integer()),
           j = mk::var("j", Sort::integer());
      return {s1, i, j, out(mk::slice(s1, i, j), "s2")};
    }
    case SchemaName::UpdateProposal:
    case SchemaName::UpdateCvc5: {
      Term s1 = mk::var("s1", seq), i = mk::var("i", Sort::integer()),
           s2 = mk::var("s2", seq);
      return {s1, i, s2, out(mk::update(s1, i, s2), "s")};
    }
    case SchemaName::Map: {
      if (arity < 1)
        throw SeqkitError(ErrorKind::UnknownSchema, "map arity must be >= 1");
      std::vector<Sort> fargs(static_cast<size_t>(arity), elem);
      Term f = mk::var("f", Sort::fn(fargs, elem));
      std::vector<Term> holes{f};
      std::vector<Term> seqs;
      for (int m = 1; m <= arity; ++m) {
        seqs.push_back(mk::var("s" + std::to_string(m), seq));
        holes.push_back(seqs.back());
      }
      std::vector<Term> app_args{f};
      for (const auto& s : seqs) app_args.push_back(s);
      holes.push_back(out(mk::app(SymbolId::SeqMap, app_args), "s"));
      return holes;
    }
    case SchemaName::Mapi: {
      if (arity < 1)
        throw SeqkitError(ErrorKind::UnknownSchema, "mapi arity must be >= 1");
      std::vector<Sort> fargs{Sort::integer()};
      fargs.insert(fargs.end(), static_cast<size_t>(arity), elem);
      Term f = mk::var("f", Sort::fn(fargs, elem));
      Term o = mk::var("o", Sort::integer());
      std::vector<Term> holes{f, o};
      std::vector<Term> seqs;
      for (int m = 1; m <= arity; ++m) {
        seqs.push_back(mk::var("s" + std::to_string(m), seq));
        holes.push_back(seqs.back());
      }
      std::vector<Term> app_args{f, o};
      for (const auto& s : seqs) app_args.push_back(s);
      holes.push_back(out(mk::app(SymbolId::SeqMapi, app_args), "s"));
      return holes;
    }
    case SchemaName::SelectOverStore: {
      return {mk::var("s", seq), mk::var("i", Sort::integer()),
              mk::var("v", elem), mk::var("j", Sort::integer())};
    }
  }
  throw SeqkitError(ErrorKind::UnknownSchema, "unknown schema");
}

}  // namespace

std::vector<Term> agreement_holes(SchemaName name, int arity,
                                  const Sort& elem) {
  return holes_for(name, arity, elem, true);
}

std::vector<Term> default_holes(SchemaName name, int arity, const Sort& elem) {
  return holes_for(name, arity, elem, false);
}

}  // namespace seqkit
