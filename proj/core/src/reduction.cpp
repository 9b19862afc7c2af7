#include "seqkit/reduction.hpp"

#include <algorithm>
#include <set>

#include "seqkit/error.hpp"

namespace seqkit {

namespace {

bool is_fragment_symbol(SymbolId sym) {
  switch (sym) {
    case SymbolId::SeqEmpty:
    case SymbolId::SeqConst:
    case SymbolId::SeqUnit:
    case SymbolId::SeqLen:
    case SymbolId::SeqAt:
    case SymbolId::SeqGet:
    case SymbolId::SeqSet:
    case SymbolId::SeqSlice:
    case SymbolId::SeqConcat:
    case SymbolId::SeqUpdate:
    case SymbolId::SeqMap:
      return true;
    default:
      return false;
  }
}

bool is_target_symbol(SymbolId sym) {
  switch (sym) {
    case SymbolId::ArrcLength:
    case SymbolId::ArrcNth:
    case SymbolId::ArrcRepeat:
    case SymbolId::ArrcApp:
    case SymbolId::ArrcSlice:
    case SymbolId::ArrcUpdate:
    case SymbolId::ArrcMap:
      return true;
    default:
      return false;
  }
}

std::string offender_hint(SymbolId sym) {
  if (sym == SymbolId::SeqMapi) return "reducible to seq.map";
  return "";
}

void collect_offenders(const Term& t, std::set<SymbolId>& seen,
                       std::vector<FragmentOffender>& out) {
  if (t.kind() == TermKind::App) {
    SymbolId sym = t.symbol();
    if (!is_fragment_symbol(sym) && !is_target_symbol(sym) &&
        seen.insert(sym).second)
      out.push_back({sym, symbol_name(sym), offender_hint(sym)});
  }
  if (t.kind() != TermKind::Var)
    for (const auto& a : t.args()) collect_offenders(a, seen, out);
}

// The printed stand-in for an absent element of the given sort.
Term delta_term(const Sort& elem, const ReduceConfig& cfg) {
  if (elem.is_int()) return mk::int_lit(cfg.delta_int);
  if (elem.is_bool()) return mk::bool_lit(false);
  if (elem.is_elem()) return mk::elem_lit(elem, 0);
  if (elem.is_seq())
    return mk::app(SymbolId::ArrcRepeat,
                   {delta_term(elem.seq_elem(), cfg), mk::int_lit(0)});
  throw SeqkitError(ErrorKind::SortMismatch,
                    "no default element for sort " + elem.to_string());
}

Term arrc_empty(const Sort& elem, const ReduceConfig& cfg) {
  return mk::app(SymbolId::ArrcRepeat, {delta_term(elem, cfg), mk::int_lit(0)});
}

Term reduce_rec(const Term& t, const ReduceConfig& cfg);

std::vector<Term> reduce_all(const std::vector<Term>& args,
                             const ReduceConfig& cfg) {
  std::vector<Term> out;
  out.reserve(args.size());
  for (const auto& a : args) out.push_back(reduce_rec(a, cfg));
  return out;
}

Term reduce_app(const Term& t, const ReduceConfig& cfg) {
  SymbolId sym = t.symbol();
  if (sym == SymbolId::SeqEmpty) return arrc_empty(t.sort().seq_elem(), cfg);
  std::vector<Term> a = reduce_all(t.args(), cfg);
  switch (sym) {
    case SymbolId::SeqConst:
      return mk::app(SymbolId::ArrcRepeat, {a[1], a[0]});
    case SymbolId::SeqUnit:
      return mk::app(SymbolId::ArrcRepeat, {a[0], mk::int_lit(1)});
    case SymbolId::SeqLen:
      return mk::app(SymbolId::ArrcLength, {a[0]});
    case SymbolId::SeqGet:
      return mk::app(SymbolId::ArrcNth, {a[0], a[1]});
    case SymbolId::SeqSet:
      return mk::app(SymbolId::ArrcUpdate, {a[1], a[0], a[2]});
    case SymbolId::SeqSlice:
      return mk::app(SymbolId::ArrcSlice, {a[0], a[1], a[2]});
    case SymbolId::SeqConcat: {
      Term acc = a.back();
      for (size_t i = a.size() - 1; i-- > 0;)
        acc = mk::app(SymbolId::ArrcApp, {a[i], acc});
      return acc;
    }
    case SymbolId::SeqAt: {
      const Sort& elem = t.sort().seq_elem();
      Term d = delta_term(elem, cfg);
      Term nth = mk::app(SymbolId::ArrcNth, {a[0], a[1]});
      return mk::ite(mk::eq(nth, d), arrc_empty(elem, cfg),
                     mk::app(SymbolId::ArrcRepeat, {nth, mk::int_lit(1)}));
    }
    case SymbolId::SeqUpdate: {
      Term len1 = mk::app(SymbolId::ArrcLength, {a[0]});
      Term len2 = mk::app(SymbolId::ArrcLength, {a[2]});
      Term prefix = mk::app(SymbolId::ArrcSlice,
                            {a[0], mk::int_lit(0), mk::sub(a[1], mk::int_lit(1))});
      Term suffix = mk::app(
          SymbolId::ArrcSlice,
          {a[0], mk::add(a[1], len2), mk::sub(len1, mk::int_lit(1))});
      return mk::app(SymbolId::ArrcApp,
                     {prefix, mk::app(SymbolId::ArrcApp, {a[2], suffix})});
    }
    case SymbolId::SeqMap:
      return mk::app(SymbolId::ArrcMap, std::move(a));
    default:
      if (is_target_symbol(sym)) return mk::app(sym, std::move(a));
      throw SeqkitError(ErrorKind::NotInFragment,
                        std::string(symbol_name(sym)) +
                            " has no array-with-concat image");
  }
}

Term reduce_rec(const Term& t, const ReduceConfig& cfg) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::IntLit:
    case TermKind::BoolLit:
    case TermKind::ElemLit:
      return t;
    case TermKind::App:
      return reduce_app(t, cfg);
    case TermKind::FnApply: {
      std::vector<Term> a = reduce_all(t.args(), cfg);
      Term fn = a[0];
      a.erase(a.begin());
      return mk::fn_apply(std::move(fn), std::move(a));
    }
    case TermKind::Ite: {
      std::vector<Term> a = reduce_all(t.args(), cfg);
      return mk::ite(a[0], a[1], a[2]);
    }
    case TermKind::Let:
      return mk::let_(t.name(), reduce_rec(t.child(0), cfg),
                      reduce_rec(t.child(1), cfg));
    case TermKind::Forall:
      return mk::forall(t.name(), reduce_rec(t.child(0), cfg));
    case TermKind::Eq: {
      std::vector<Term> a = reduce_all(t.args(), cfg);
      return mk::eq(a[0], a[1]);
    }
    case TermKind::And:
      return mk::and_(reduce_all(t.args(), cfg));
    case TermKind::Or:
      return mk::or_(reduce_all(t.args(), cfg));
    case TermKind::Not:
      return mk::not_(reduce_rec(t.child(0), cfg));
    case TermKind::Implies: {
      std::vector<Term> a = reduce_all(t.args(), cfg);
      return mk::implies(a[0], a[1]);
    }
    case TermKind::Le: {
      std::vector<Term> a = reduce_all(t.args(), cfg);
      return mk::le(a[0], a[1]);
    }
    case TermKind::Lt: {
      std::vector<Term> a = reduce_all(t.args(), cfg);
      return mk::lt(a[0], a[1]);
    }
    case TermKind::Add: {
      std::vector<Term> a = reduce_all(t.args(), cfg);
      return mk::add(a[0], a[1]);
    }
    case TermKind::Sub: {
      std::vector<Term> a = reduce_all(t.args(), cfg);
      return mk::sub(a[0], a[1]);
    }
    case TermKind::Mul: {
      std::vector<Term> a = reduce_all(t.args(), cfg);
      return mk::mul(a[0], a[1]);
    }
  }
  throw SeqkitError(ErrorKind::NotInFragment, "unexpected term kind");
}

// index == var + offset patterns: v, (+ v c), (+ c v), (- v c).
bool match_shifted_index(const Term& index, const std::string& var,
                         long long& offset) {
  if (index.kind() == TermKind::Var && index.name() == var) {
    offset = 0;
    return true;
  }
  if (index.kind() == TermKind::Add) {
    const Term& l = index.child(0);
    const Term& r = index.child(1);
    if (l.kind() == TermKind::Var && l.name() == var &&
        r.kind() == TermKind::IntLit) {
      offset = r.int_value();
      return true;
    }
    if (r.kind() == TermKind::Var && r.name() == var &&
        l.kind() == TermKind::IntLit) {
      offset = l.int_value();
      return true;
    }
  }
  if (index.kind() == TermKind::Sub) {
    const Term& l = index.child(0);
    const Term& r = index.child(1);
    if (l.kind() == TermKind::Var && l.name() == var &&
        r.kind() == TermKind::IntLit) {
      offset = -r.int_value();
      return true;
    }
  }
  return false;
}

struct SeqOffsets {
  Term seq;
  std::set<long long> offsets;
};

void scan_reads(const Term& t, const std::string& var,
                std::vector<SeqOffsets>& acc) {
  // A rebinding of the quantified name hides it from the subtree.
  if ((t.kind() == TermKind::Forall || t.kind() == TermKind::Let) &&
      t.name() == var) {
    if (t.kind() == TermKind::Let) scan_reads(t.child(0), var, acc);
    return;
  }
  if (t.kind() == TermKind::App &&
      (t.symbol() == SymbolId::SeqGet || t.symbol() == SymbolId::ArrcNth)) {
    const Term& seq = t.child(0);
    const Term& index = t.child(1);
    long long offset;
    if (match_shifted_index(index, var, offset)) {
      auto it = std::find_if(acc.begin(), acc.end(),
                             [&](const SeqOffsets& e) { return e.seq == seq; });
      if (it == acc.end())
        acc.push_back({seq, {offset}});
      else
        it->offsets.insert(offset);
    }
  }
  if (t.kind() != TermKind::Var)
    for (const auto& a : t.args()) scan_reads(a, var, acc);
}

void detect_rec(const Term& t, ShiftReport& report) {
  if (t.kind() == TermKind::Forall) {
    std::vector<SeqOffsets> acc;
    scan_reads(t.child(0), t.name(), acc);
    for (const auto& e : acc)
      if (e.offsets.size() >= 2)
        report.witnesses.push_back(
            {t.name(), e.seq, *e.offsets.begin(), *e.offsets.rbegin()});
  }
  if (t.kind() != TermKind::Var)
    for (const auto& a : t.args()) detect_rec(a, report);
}

}  // namespace

FragmentCheck in_fragment(const Term& t) {
  FragmentCheck result;
  std::set<SymbolId> seen;
  collect_offenders(t, seen, result.offenders);
  result.in_fragment = result.offenders.empty();
  return result;
}

Term reduce_to_arrayc(const Term& t, const ReduceConfig& cfg) {
  FragmentCheck check = in_fragment(t);
  if (!check.in_fragment) {
    std::string msg = "not in the reducible fragment:";
    for (const auto& o : check.offenders) {
      msg += " " + o.name;
      if (!o.hint.empty()) msg += " (" + o.hint + ")";
    }
    throw SeqkitError(ErrorKind::NotInFragment, msg);
  }
  return reduce_rec(t, cfg);
}

ShiftReport detect_index_shifting(const Term& t) {
  ShiftReport report;
  detect_rec(t, report);
  report.found = !report.witnesses.empty();
  return report;
}

}  // namespace seqkit
