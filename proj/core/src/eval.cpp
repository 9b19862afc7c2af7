#include "seqkit/eval.hpp"

#include <algorithm>
#include <optional>

#include "seqkit/error.hpp"

namespace seqkit {

namespace {

// Guards seq.const / arrc.repeat against runaway allocations; bounded model
// values are tiny, but lengths are computed by unrestricted arithmetic.
constexpr long long kMaxBuiltLen = 1'000'000;

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw SeqkitError(ErrorKind::Resource, "integer overflow in +");
  return r;
}

long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r))
    throw SeqkitError(ErrorKind::Resource, "integer overflow in -");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw SeqkitError(ErrorKind::Resource, "integer overflow in *");
  return r;
}

struct Evaluator {
  const ValueEnv& base;
  TokenSink& sink;
  const EvalConfig& cfg;

  bool is_profile(SemanticsProfile p) const { return cfg.profile == p; }

  [[noreturn]] void violation(const std::string& msg) const {
    throw SeqkitError(ErrorKind::ProfileViolation,
                      msg + " under profile " +
                          std::string(to_string(cfg.profile)));
  }

  // Element access shared by seq.get and the out-of-range reads of
  // seq.mapi: out-of-bounds positions produce the seq.get token of the
  // same key, keeping the two congruent.
  Value read_elem(const Value& s, long long i) {
    const SeqData& sd = s.seq();
    if (i >= 0 && static_cast<size_t>(i) < sd.elems.size())
      return sd.elems[static_cast<size_t>(i)];
    if (is_profile(SemanticsProfile::ArrayC))
      return delta_value(sd.elem, cfg.bounds);
    TokenKey key{"seq.get", {s, Value::integer(i)}};
    return sink.resolve(key, sd.elem);
  }

  Value seq_of(const Sort& elem, std::vector<Value> elems) {
    return Value::seq(elem, std::move(elems));
  }

  Value built_seq(const Sort& elem, long long n, const Value& v) {
    if (n <= 0) return seq_of(elem, {});
    if (n > kMaxBuiltLen)
      throw SeqkitError(ErrorKind::Resource,
                        "refusing to build a sequence of length " +
                            std::to_string(n));
    return seq_of(elem, std::vector<Value>(static_cast<size_t>(n), v));
  }

  // First position >= from where pattern occurs in s, or -1. The empty
  // pattern occurs at every position 0..len.
  long long find_at(const SeqData& s, const SeqData& pat, long long from) {
    long long n = static_cast<long long>(s.elems.size());
    long long m = static_cast<long long>(pat.elems.size());
    if (from < 0) from = 0;
    if (from > n) return -1;
    for (long long p = from; p + m <= n; ++p) {
      bool hit = true;
      for (long long t = 0; t < m; ++t) {
        if (!s.elems[p + t].equals(pat.elems[t])) {
          hit = false;
          break;
        }
      }
      if (hit) return p;
    }
    return -1;
  }

  Value eval_term(const Term& t, ValueEnv& locals) {
    switch (t.kind()) {
      case TermKind::Var: {
        auto lit = locals.find(t.name());
        if (lit != locals.end()) return lit->second;
        auto bit = base.find(t.name());
        if (bit != base.end()) return bit->second;
        throw SeqkitError(ErrorKind::UnsortedVariable,
                          "no value bound for " + t.name());
      }
      case TermKind::IntLit:
        return Value::integer(t.int_value());
      case TermKind::BoolLit:
        return Value::boolean(t.bool_value());
      case TermKind::ElemLit:
        return Value::elem(t.sort(), t.elem_index());
      case TermKind::App:
        return eval_app(t, locals);
      case TermKind::FnApply: {
        Value fn = eval_term(t.child(0), locals);
        std::vector<Value> args;
        for (size_t i = 1; i < t.num_children(); ++i)
          args.push_back(eval_term(t.child(i), locals));
        return apply_fn(fn, std::move(args), base, sink, cfg);
      }
      case TermKind::Ite:
        return eval_term(t.child(0), locals).as_bool()
                   ? eval_term(t.child(1), locals)
                   : eval_term(t.child(2), locals);
      case TermKind::Let: {
        Value bound = eval_term(t.child(0), locals);
        auto saved = locals.find(t.name()) != locals.end()
                         ? std::optional<Value>(locals[t.name()])
                         : std::nullopt;
        locals[t.name()] = std::move(bound);
        Value r = eval_term(t.child(1), locals);
        if (saved) locals[t.name()] = *saved; else locals.erase(t.name());
        return r;
      }
      case TermKind::Forall: {
        auto saved = locals.find(t.name()) != locals.end()
                         ? std::optional<Value>(locals[t.name()])
                         : std::nullopt;
        bool all = true;
        for (long long v = cfg.bounds.int_lo; v <= cfg.bounds.int_hi; ++v) {
          locals[t.name()] = Value::integer(v);
          if (!eval_term(t.child(0), locals).as_bool()) {
            all = false;
            break;
          }
        }
        if (saved) locals[t.name()] = *saved; else locals.erase(t.name());
        return Value::boolean(all);
      }
      case TermKind::Eq:
        return Value::boolean(
            eval_term(t.child(0), locals).equals(eval_term(t.child(1), locals)));
      case TermKind::And: {
        for (const auto& a : t.args())
          if (!eval_term(a, locals).as_bool()) return Value::boolean(false);
        return Value::boolean(true);
      }
      case TermKind::Or: {
        for (const auto& a : t.args())
          if (eval_term(a, locals).as_bool()) return Value::boolean(true);
        return Value::boolean(false);
      }
      case TermKind::Not:
        return Value::boolean(!eval_term(t.child(0), locals).as_bool());
      case TermKind::Implies: {
        if (!eval_term(t.child(0), locals).as_bool())
          return Value::boolean(true);
        return Value::boolean(eval_term(t.child(1), locals).as_bool());
      }
      case TermKind::Le:
        return Value::boolean(eval_term(t.child(0), locals).as_int() <=
                              eval_term(t.child(1), locals).as_int());
      case TermKind::Lt:
        return Value::boolean(eval_term(t.child(0), locals).as_int() <
                              eval_term(t.child(1), locals).as_int());
      case TermKind::Add:
        return Value::integer(checked_add(eval_term(t.child(0), locals).as_int(),
                                          eval_term(t.child(1), locals).as_int()));
      case TermKind::Sub:
        return Value::integer(checked_sub(eval_term(t.child(0), locals).as_int(),
                                          eval_term(t.child(1), locals).as_int()));
      case TermKind::Mul:
        return Value::integer(checked_mul(eval_term(t.child(0), locals).as_int(),
                                          eval_term(t.child(1), locals).as_int()));
    }
    throw SeqkitError(ErrorKind::SortMismatch, "unhandled term kind");
  }

  Value eval_app(const Term& t, ValueEnv& locals) {
    SymbolId sym = t.symbol();
    if (!in_profile(sym, cfg.profile))
      violation(std::string(symbol_name(sym)) + " is unavailable");

    std::vector<Value> args;
    args.reserve(t.num_children());
    for (const auto& a : t.args()) args.push_back(eval_term(a, locals));

    switch (sym) {
      case SymbolId::SeqEmpty:
        return seq_of(t.sort().seq_elem(), {});
      case SymbolId::SeqConst:
        return built_seq(t.sort().seq_elem(), args[0].as_int(), args[1]);
      case SymbolId::SeqUnit:
        return seq_of(t.sort().seq_elem(), {args[0]});
      case SymbolId::SeqLen:
      case SymbolId::ArrcLength:
        return Value::integer(
            static_cast<long long>(args[0].seq().elems.size()));
      case SymbolId::SeqGet:
        return read_elem(args[0], args[1].as_int());
      case SymbolId::ArrcNth: {
        const SeqData& sd = args[0].seq();
        long long i = args[1].as_int();
        if (i >= 0 && static_cast<size_t>(i) < sd.elems.size())
          return sd.elems[static_cast<size_t>(i)];
        return delta_value(sd.elem, cfg.bounds);
      }
      case SymbolId::SeqSet:
        return eval_set(args[0], args[1].as_int(), args[2]);
      case SymbolId::ArrcUpdate:
        return eval_set(args[1], args[0].as_int(), args[2]);
      case SymbolId::SeqSlice: {
        // The ArrayC profile slices by the arrc convention; the clamped
        // inclusive default coincides with the Proposal rule.
        if (is_profile(SemanticsProfile::Cvc5) ||
            is_profile(SemanticsProfile::Z3))
          return slice_extract(args[0], args[1].as_int(), args[2].as_int());
        if (is_profile(SemanticsProfile::ArrayC) &&
            cfg.arrc_slice == SliceConvention::Exclusive)
          return slice_exclusive(args[0], args[1].as_int(), args[2].as_int());
        return slice_inclusive(args[0], args[1].as_int(), args[2].as_int());
      }
      case SymbolId::ArrcSlice: {
        if (cfg.arrc_slice == SliceConvention::Exclusive)
          return slice_exclusive(args[0], args[1].as_int(), args[2].as_int());
        return slice_inclusive(args[0], args[1].as_int(), args[2].as_int());
      }
      case SymbolId::SeqConcat:
      case SymbolId::ArrcApp: {
        std::vector<Value> out;
        for (const auto& a : args) {
          const SeqData& sd = a.seq();
          out.insert(out.end(), sd.elems.begin(), sd.elems.end());
        }
        return seq_of(args[0].seq().elem, std::move(out));
      }
      case SymbolId::SeqAt: {
        const SeqData& sd = args[0].seq();
        long long i = args[1].as_int();
        if (i >= 0 && static_cast<size_t>(i) < sd.elems.size())
          return seq_of(sd.elem, {sd.elems[static_cast<size_t>(i)]});
        return seq_of(sd.elem, {});
      }
      case SymbolId::SeqContains:
        // contains(s1, s2): s1 occurs inside s2.
        return Value::boolean(find_at(args[1].seq(), args[0].seq(), 0) >= 0);
      case SymbolId::SeqIndexof: {
        const SeqData& s = args[0].seq();
        long long from = std::max<long long>(args[2].as_int(), 0);
        return Value::integer(find_at(s, args[1].seq(), from));
      }
      case SymbolId::SeqPrefixof: {
        const SeqData& pre = args[0].seq();
        const SeqData& s = args[1].seq();
        if (pre.elems.size() > s.elems.size()) return Value::boolean(false);
        for (size_t i = 0; i < pre.elems.size(); ++i)
          if (!pre.elems[i].equals(s.elems[i])) return Value::boolean(false);
        return Value::boolean(true);
      }
      case SymbolId::SeqSuffixof: {
        const SeqData& suf = args[0].seq();
        const SeqData& s = args[1].seq();
        if (suf.elems.size() > s.elems.size()) return Value::boolean(false);
        size_t off = s.elems.size() - suf.elems.size();
        for (size_t i = 0; i < suf.elems.size(); ++i)
          if (!suf.elems[i].equals(s.elems[off + i])) return Value::boolean(false);
        return Value::boolean(true);
      }
      case SymbolId::SeqReplace: {
        const SeqData& s = args[0].seq();
        const SeqData& pat = args[1].seq();
        const SeqData& rep = args[2].seq();
        if (pat.elems.empty()) {
          std::vector<Value> out = rep.elems;
          out.insert(out.end(), s.elems.begin(), s.elems.end());
          return seq_of(s.elem, std::move(out));
        }
        long long p = find_at(s, pat, 0);
        if (p < 0) return args[0];
        std::vector<Value> out(s.elems.begin(), s.elems.begin() + p);
        out.insert(out.end(), rep.elems.begin(), rep.elems.end());
        out.insert(out.end(), s.elems.begin() + p + pat.elems.size(),
                   s.elems.end());
        return seq_of(s.elem, std::move(out));
      }
      case SymbolId::SeqReplaceAll: {
        const SeqData& s = args[0].seq();
        const SeqData& pat = args[1].seq();
        const SeqData& rep = args[2].seq();
        if (pat.elems.empty()) return args[0];
        std::vector<Value> out;
        size_t p = 0;
        while (p < s.elems.size()) {
          if (p + pat.elems.size() <= s.elems.size() &&
              find_at(s, pat, static_cast<long long>(p)) ==
                  static_cast<long long>(p)) {
            out.insert(out.end(), rep.elems.begin(), rep.elems.end());
            p += pat.elems.size();
          } else {
            out.push_back(s.elems[p]);
            ++p;
          }
        }
        return seq_of(s.elem, std::move(out));
      }
      case SymbolId::SeqRev: {
        std::vector<Value> out = args[0].seq().elems;
        std::reverse(out.begin(), out.end());
        return seq_of(args[0].seq().elem, std::move(out));
      }
      case SymbolId::SeqUpdate: {
        const SeqData& s1 = args[0].seq();
        long long i = args[1].as_int();
        const SeqData& s2 = args[2].seq();
        long long n1 = static_cast<long long>(s1.elems.size());
        long long n2 = static_cast<long long>(s2.elems.size());
        if (is_profile(SemanticsProfile::Cvc5) && !(i >= 0 && i < n1))
          return args[0];
        std::vector<Value> out = s1.elems;
        long long lo = std::max<long long>(i, 0);
        long long hi = (i >= n1) ? lo : std::min(checked_add(i, n2), n1);
        for (long long j = lo; j < hi; ++j)
          out[static_cast<size_t>(j)] = s2.elems[static_cast<size_t>(j - i)];
        return seq_of(s1.elem, std::move(out));
      }
      case SymbolId::SeqMap:
      case SymbolId::ArrcMap: {
        size_t n = args.size() - 1;
        if (sym == SymbolId::SeqMap && is_profile(SemanticsProfile::Z3) &&
            n != 1)
          violation("seq.map over " + std::to_string(n) + " sequences");
        size_t k = args[1].seq().elems.size();
        for (size_t m = 2; m < args.size(); ++m)
          k = std::min(k, args[m].seq().elems.size());
        std::vector<Value> out;
        out.reserve(k);
        for (size_t p = 0; p < k; ++p) {
          std::vector<Value> fargs;
          fargs.reserve(n);
          for (size_t m = 1; m < args.size(); ++m)
            fargs.push_back(args[m].seq().elems[p]);
          out.push_back(apply_fn(args[0], std::move(fargs), base, sink, cfg));
        }
        return seq_of(t.sort().seq_elem(), std::move(out));
      }
      case SymbolId::SeqMapi: {
        size_t n = args.size() - 2;
        if (is_profile(SemanticsProfile::Z3) && n != 1)
          violation("seq.mapi over " + std::to_string(n) + " sequences");
        long long o = args[1].as_int();
        long long k = static_cast<long long>(args[2].seq().elems.size());
        for (size_t m = 3; m < args.size(); ++m)
          k = std::min(k, static_cast<long long>(args[m].seq().elems.size()));
        if (o >= k) return seq_of(t.sort().seq_elem(), {});
        long long out_len = checked_sub(k, o);
        if (out_len > kMaxBuiltLen)
          throw SeqkitError(ErrorKind::Resource,
                            "refusing to build a sequence of length " +
                                std::to_string(out_len));
        std::vector<Value> out;
        out.reserve(static_cast<size_t>(out_len));
        for (long long p = 0; p < out_len; ++p) {
          std::vector<Value> fargs;
          fargs.reserve(n + 1);
          fargs.push_back(Value::integer(checked_add(o, p)));
          for (size_t m = 2; m < args.size(); ++m)
            fargs.push_back(read_elem(args[m], o + p));
          out.push_back(apply_fn(args[0], std::move(fargs), base, sink, cfg));
        }
        return seq_of(t.sort().seq_elem(), std::move(out));
      }
      case SymbolId::SeqFoldLeft: {
        Value acc = args[1];
        for (const auto& e : args[2].seq().elems)
          acc = apply_fn(args[0], {acc, e}, base, sink, cfg);
        return acc;
      }
      case SymbolId::SeqFoldLefti: {
        long long o = args[1].as_int();
        Value acc = args[2];
        const auto& elems = args[3].seq().elems;
        for (size_t p = 0; p < elems.size(); ++p)
          acc = apply_fn(args[0],
                         {Value::integer(checked_add(o, static_cast<long long>(p))),
                          acc, elems[p]},
                         base, sink, cfg);
        return acc;
      }
      case SymbolId::SeqGetDefault: {
        const SeqData& sd = args[0].seq();
        long long i = args[1].as_int();
        if (i >= 0 && static_cast<size_t>(i) < sd.elems.size())
          return sd.elems[static_cast<size_t>(i)];
        return args[2];
      }
      case SymbolId::ArrcRepeat:
        return built_seq(t.sort().seq_elem(), args[1].as_int(), args[0]);
    }
    throw SeqkitError(ErrorKind::UnknownSymbol, "unhandled symbol");
  }

  Value eval_set(const Value& s, long long i, const Value& v) {
    const SeqData& sd = s.seq();
    if (i < 0 || static_cast<size_t>(i) >= sd.elems.size()) return s;
    std::vector<Value> out = sd.elems;
    out[static_cast<size_t>(i)] = v;
    return seq_of(sd.elem, std::move(out));
  }

  // Clamped end-inclusive window max(a,0)..min(b,len-1).
  Value slice_inclusive(const Value& s, long long a, long long b) {
    const SeqData& sd = s.seq();
    long long n = static_cast<long long>(sd.elems.size());
    long long lo = std::max<long long>(a, 0);
    long long hi = std::min(b, n - 1);
    if (lo > hi) return seq_of(sd.elem, {});
    return seq_of(sd.elem, std::vector<Value>(sd.elems.begin() + lo,
                                              sd.elems.begin() + hi + 1));
  }

  // extract(s, i, l): start index plus length.
  Value slice_extract(const Value& s, long long i, long long l) {
    const SeqData& sd = s.seq();
    long long n = static_cast<long long>(sd.elems.size());
    if (!(i >= 0 && i < n && l > 0)) return seq_of(sd.elem, {});
    long long hi = (l >= n - i) ? n : i + l;
    return seq_of(sd.elem, std::vector<Value>(sd.elems.begin() + i,
                                              sd.elems.begin() + hi));
  }

  // Clamped end-exclusive window max(a,0)..min(b,len)-1.
  Value slice_exclusive(const Value& s, long long a, long long b) {
    const SeqData& sd = s.seq();
    long long n = static_cast<long long>(sd.elems.size());
    long long lo = std::max<long long>(a, 0);
    long long hi = std::min(b, n);
    if (lo >= hi) return seq_of(sd.elem, {});
    return seq_of(sd.elem, std::vector<Value>(sd.elems.begin() + lo,
                                              sd.elems.begin() + hi));
  }
};

}  // namespace

Value StrictTokenSink::resolve(const TokenKey& key, const Sort&) {
  auto it = assignment_.find(key);
  if (it == assignment_.end()) {
    std::string args;
    for (const auto& a : key.args) {
      args += ' ';
      args += a.to_string();
    }
    throw SeqkitError(ErrorKind::MissingToken,
                      "no value assigned to token (" + key.symbol + args + ")");
  }
  return it->second;
}

Value SymbolicTokenSink::resolve(const TokenKey& key, const Sort& sort) {
  return Value::unspecified(sort, key);
}

Value eval(const Term& t, const ValueEnv& base, TokenSink& sink,
           const EvalConfig& cfg) {
  Evaluator ev{base, sink, cfg};
  ValueEnv locals;
  return ev.eval_term(t, locals);
}

Value delta_value(const Sort& sort, const Bounds& bounds) {
  switch (sort.kind()) {
    case SortKind::Int:
      return Value::integer(bounds.delta_int);
    case SortKind::Bool:
      return Value::boolean(false);
    case SortKind::Elem:
      return Value::elem(sort, 0);
    case SortKind::Seq:
      return Value::seq(sort.seq_elem(), {});
    case SortKind::Fn:
      break;
  }
  throw SeqkitError(ErrorKind::SortMismatch,
                    "no default value for sort " + sort.to_string());
}

Value apply_fn(const Value& fn, std::vector<Value> args, const ValueEnv& base,
               TokenSink& sink, const EvalConfig& cfg) {
  if (fn.kind() != ValueKind::Fn)
    throw SeqkitError(ErrorKind::SortMismatch,
                      "applied value is not a function");
  if (fn.fn_def()) {
    const FnDef& d = *fn.fn_def();
    if (d.params.size() != args.size())
      throw SeqkitError(ErrorKind::ArityMismatch,
                        d.name + " expects " + std::to_string(d.params.size()) +
                            " arguments, got " + std::to_string(args.size()));
    Evaluator ev{base, sink, cfg};
    ValueEnv locals;
    for (size_t i = 0; i < args.size(); ++i)
      locals.emplace(d.params[i].first, std::move(args[i]));
    return ev.eval_term(d.body, locals);
  }
  const auto& table = fn.fn_table();
  if (!table)
    throw SeqkitError(ErrorKind::SortMismatch, "function value has no body");
  const Value* hit = table->lookup(args);
  if (!hit) {
    std::string desc;
    for (const auto& a : args) {
      desc += ' ';
      desc += a.to_string();
    }
    throw SeqkitError(ErrorKind::MissingFnEntry,
                      "function table has no entry for (" + desc + " )");
  }
  return *hit;
}

}  // namespace seqkit
