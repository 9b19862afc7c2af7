#include "seqkit/oracle.hpp"

#include <algorithm>

#include "seqkit/error.hpp"

namespace seqkit {

namespace {

constexpr std::uint64_t kSaturated = std::uint64_t(1) << 63;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a >= kSaturated || b >= kSaturated) return kSaturated;
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r) || r >= kSaturated) return kSaturated;
  return r;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r) || r >= kSaturated) return kSaturated;
  return r;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    r = sat_mul(r, base);
    if (r >= kSaturated) return kSaturated;
  }
  return r;
}

// Cap on materialized function-table domains; beyond it enumeration would
// not finish anyway.
constexpr std::uint64_t kMaxFnDomain = 1u << 20;

}  // namespace

ValueUniverse::ValueUniverse(const Bounds& bounds) : bounds_(bounds) {
  bounds_.validate();
}

std::uint64_t ValueUniverse::count(const Sort& sort) const {
  switch (sort.kind()) {
    case SortKind::Bool:
      return 2;
    case SortKind::Int:
      return static_cast<std::uint64_t>(bounds_.window_size());
    case SortKind::Elem:
      return static_cast<std::uint64_t>(bounds_.elem_card);
    case SortKind::Seq: {
      std::uint64_t per = count(sort.seq_elem());
      std::uint64_t total = 0;
      std::uint64_t block = 1;
      for (int len = 0; len <= bounds_.max_len; ++len) {
        total = sat_add(total, block);
        block = sat_mul(block, per);
      }
      return total;
    }
    case SortKind::Fn: {
      std::uint64_t tuples = 1;
      for (const auto& a : sort.fn_args()) tuples = sat_mul(tuples, count(a));
      return sat_pow(count(sort.fn_ret()), tuples);
    }
  }
  throw SeqkitError(ErrorKind::SortMismatch, "null sort has no universe");
}

Value ValueUniverse::at(const Sort& sort, std::uint64_t index) const {
  switch (sort.kind()) {
    case SortKind::Bool:
      return Value::boolean(index != 0);
    case SortKind::Int:
      return Value::integer(bounds_.int_lo + static_cast<long long>(index));
    case SortKind::Elem:
      return Value::elem(sort, static_cast<int>(index));
    case SortKind::Seq: {
      std::uint64_t per = count(sort.seq_elem());
      for (int len = 0; len <= bounds_.max_len; ++len) {
        std::uint64_t block = sat_pow(per, static_cast<std::uint64_t>(len));
        if (index < block) {
          // First position is the most significant digit.
          std::vector<std::uint64_t> digits(static_cast<size_t>(len), 0);
          for (int p = len - 1; p >= 0; --p) {
            digits[static_cast<size_t>(p)] = index % per;
            index /= per;
          }
          std::vector<Value> elems;
          elems.reserve(digits.size());
          for (std::uint64_t d : digits)
            elems.push_back(at(sort.seq_elem(), d));
          return Value::seq(sort.seq_elem(), std::move(elems));
        }
        index -= block;
      }
      throw SeqkitError(ErrorKind::Resource, "sequence index out of universe");
    }
    case SortKind::Fn: {
      std::uint64_t tuples = 1;
      for (const auto& a : sort.fn_args()) tuples = sat_mul(tuples, count(a));
      if (tuples > kMaxFnDomain)
        throw SeqkitError(ErrorKind::Resource,
                          "function domain too large to materialize");
      std::uint64_t ret_count = count(sort.fn_ret());
      size_t n = static_cast<size_t>(tuples);
      // Digits of index base ret_count; the first tuple is most significant.
      std::vector<std::uint64_t> digits(n, 0);
      for (size_t j = n; j-- > 0;) {
        digits[j] = index % ret_count;
        index /= ret_count;
      }
      auto table = std::make_shared<FnTableData>();
      table->entries.reserve(n);
      const auto& args = sort.fn_args();
      std::vector<std::uint64_t> tuple_idx(args.size(), 0);
      for (size_t j = 0; j < n; ++j) {
        std::vector<Value> tuple;
        tuple.reserve(args.size());
        for (size_t m = 0; m < args.size(); ++m)
          tuple.push_back(at(args[m], tuple_idx[m]));
        table->entries.emplace_back(std::move(tuple),
                                    at(sort.fn_ret(), digits[j]));
        // Lexicographic successor; the last argument varies fastest.
        for (size_t m = args.size(); m-- > 0;) {
          if (++tuple_idx[m] < count(args[m])) break;
          tuple_idx[m] = 0;
        }
      }
      return Value::fn_table(sort, std::move(table));
    }
  }
  throw SeqkitError(ErrorKind::SortMismatch, "null sort has no universe");
}

std::vector<Value> ValueUniverse::token_domain(const Sort& sort) const {
  if (sort.is_seq())
    throw SeqkitError(
        ErrorKind::Resource,
        "an unspecified read of sequence sort " + sort.to_string() +
            " has no enumerable token domain within these bounds");
  if (sort.is_fn())
    throw SeqkitError(ErrorKind::Resource,
                      "a function sort has no token domain");
  std::uint64_t n = count(sort);
  std::vector<Value> out;
  out.reserve(static_cast<size_t>(n));
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(at(sort, i));
  return out;
}

ModelEnumerator::ModelEnumerator(const SortEnv& vars, const Bounds& bounds,
                                 std::uint64_t ceiling)
    : universe_(bounds) {
  for (const auto& [name, sort] : vars) {
    vars_.emplace_back(name, sort);
    counts_.push_back(universe_.count(sort));
    total_ = sat_mul(total_, counts_.back());
  }
  idx_.assign(vars_.size(), 0);
  if (total_ > ceiling)
    throw SeqkitError(
        ErrorKind::UniverseTooLarge,
        "the bounded model universe has " +
            (total_ >= kSaturated ? std::string("more than 2^63")
                                  : std::to_string(total_)) +
            " models, above the ceiling of " + std::to_string(ceiling));
}

void ModelEnumerator::reset() {
  idx_.assign(vars_.size(), 0);
  done_ = false;
  fresh_ = true;
}

bool ModelEnumerator::next(ValueEnv& out) {
  if (done_) return false;
  if (fresh_) {
    fresh_ = false;
  } else {
    // Odometer step; the last (alphabetically greatest) name varies fastest.
    size_t i = vars_.size();
    while (i-- > 0) {
      if (++idx_[i] < counts_[i]) break;
      idx_[i] = 0;
      if (i == 0) {
        done_ = true;
        return false;
      }
    }
    if (vars_.empty()) {
      done_ = true;
      return false;
    }
  }
  out.clear();
  for (size_t i = 0; i < vars_.size(); ++i)
    out[vars_[i].first] = universe_.at(vars_[i].second, idx_[i]);
  return true;
}

namespace {

// Discovers unspecified reads as evaluation reaches them and walks their
// joint assignment space depth-first. Replays are deterministic: entries
// before the advanced one resolve identically, so each pass re-reaches the
// whole trail in order and extends it with whatever new reads appear.
class TrailSink : public TokenSink {
 public:
  TrailSink(const ValueUniverse& universe, const TokenAssignment* preset)
      : universe_(universe), preset_(preset) {}

  Value resolve(const TokenKey& key, const Sort& sort) override {
    if (preset_) {
      auto it = preset_->find(key);
      if (it != preset_->end()) return it->second;
    }
    auto it = pos_.find(key);
    if (it != pos_.end()) {
      const Entry& e = trail_[it->second];
      return e.domain[e.idx];
    }
    Entry e{key, universe_.token_domain(sort), 0};
    pos_.emplace(key, trail_.size());
    trail_.push_back(std::move(e));
    return trail_.back().domain[0];
  }

  // Moves to the next token assignment: bump the newest entry, dropping
  // exhausted ones so the carry propagates. False once the space is walked.
  bool advance() {
    while (!trail_.empty()) {
      Entry& last = trail_.back();
      if (++last.idx < last.domain.size()) return true;
      pos_.erase(last.key);
      trail_.pop_back();
    }
    return false;
  }

  void collect(TokenAssignment& out) const {
    for (const auto& e : trail_) out[e.key] = e.domain[e.idx];
    if (preset_)
      for (const auto& [k, v] : *preset_) out[k] = v;
  }

 private:
  struct Entry {
    TokenKey key;
    std::vector<Value> domain;
    size_t idx;
  };
  const ValueUniverse& universe_;
  const TokenAssignment* preset_;
  std::vector<Entry> trail_;
  std::map<TokenKey, size_t> pos_;
};

SortEnv enumerated_vars(const Term& phi, const OracleOptions& opts) {
  SortEnv fv = free_vars(phi);
  if (opts.fixed_env)
    for (const auto& [name, value] : *opts.fixed_env) fv.erase(name);
  return fv;
}

ValueEnv with_fixed(const ValueEnv& env, const OracleOptions& opts) {
  ValueEnv base = env;
  if (opts.fixed_env)
    for (const auto& [name, value] : *opts.fixed_env) base[name] = value;
  return base;
}

std::string ceiling_reason(std::uint64_t ceiling) {
  return "stopped at the evaluation ceiling of " + std::to_string(ceiling);
}

// Every integer literal must be enumerable, or verdicts about the formula
// would quantify over a window that cannot even express it.
void require_literals_in_window(const Term& t, const Bounds& bounds) {
  if (t.kind() == TermKind::IntLit) {
    long long v = t.int_value();
    if (v < bounds.int_lo || v > bounds.int_hi)
      throw SeqkitError(ErrorKind::WindowTooSmall,
                        "the literal " + std::to_string(v) +
                            " lies outside the integer window [" +
                            std::to_string(bounds.int_lo) + ", " +
                            std::to_string(bounds.int_hi) + "]");
  }
  for (size_t i = 0; i < t.num_children(); ++i)
    require_literals_in_window(t.child(i), bounds);
}

}  // namespace

Verdict check_sat_bounded(const Term& phi, const Bounds& bounds,
                          SemanticsProfile profile, const OracleOptions& opts) {
  if (!phi.sort().is_bool())
    throw SeqkitError(ErrorKind::SortMismatch,
                      "satisfiability needs a Bool term");
  require_literals_in_window(phi, bounds);
  ValueUniverse universe(bounds);
  ModelEnumerator models(enumerated_vars(phi, opts), bounds, opts.ceiling);
  EvalConfig cfg{profile, bounds, opts.arrc_slice};

  Verdict verdict;
  ValueEnv env;
  while (models.next(env)) {
    ValueEnv base = with_fixed(env, opts);
    TrailSink sink(universe, opts.preset_tokens);
    do {
      if (verdict.evaluations >= opts.ceiling) {
        verdict.kind = Verdict::Kind::Unknown;
        verdict.reason = ceiling_reason(opts.ceiling);
        return verdict;
      }
      ++verdict.evaluations;
      Value v = eval(phi, base, sink, cfg);
      if (v.as_bool()) {
        Model m;
        m.base = env;
        sink.collect(m.tokens);
        // The witness must also pass a strict replay, where every token
        // is looked up rather than invented.
        StrictTokenSink strict(m.tokens);
        Value replay = eval(phi, base, strict, cfg);
        if (!replay.as_bool())
          throw SeqkitError(ErrorKind::Resource,
                            "internal: witness failed its strict replay");
        verdict.kind = Verdict::Kind::Sat;
        verdict.model = std::move(m);
        return verdict;
      }
    } while (sink.advance());
  }
  verdict.kind = Verdict::Kind::UnsatWithinBounds;
  return verdict;
}

ValidityResult check_valid_bounded(const Term& phi, const Bounds& bounds,
                                   SemanticsProfile profile,
                                   const OracleOptions& opts) {
  Verdict v = check_sat_bounded(mk::not_(phi), bounds, profile, opts);
  ValidityResult r;
  r.evaluations = v.evaluations;
  switch (v.kind) {
    case Verdict::Kind::Sat:
      r.valid = false;
      r.counterexample = std::move(v.model);
      break;
    case Verdict::Kind::UnsatWithinBounds:
      r.valid = true;
      break;
    case Verdict::Kind::Unknown:
      r.unknown = true;
      r.reason = v.reason;
      break;
  }
  return r;
}

EquivResult check_equiv_bounded(const Term& left, const Term& right,
                                const Bounds& bounds,
                                SemanticsProfile left_profile,
                                SemanticsProfile right_profile,
                                const OracleOptions& opts, bool collect_all) {
  if (left.sort() != right.sort())
    throw SeqkitError(ErrorKind::SortMismatch,
                      "equivalence needs same-sorted terms, got " +
                          left.sort().to_string() + " and " +
                          right.sort().to_string());
  if (left.sort().is_fn())
    throw SeqkitError(ErrorKind::SortMismatch,
                      "function-sorted terms cannot be compared");
  require_literals_in_window(left, bounds);
  require_literals_in_window(right, bounds);

  SortEnv fv = free_vars(left);
  for (const auto& [name, sort] : free_vars(right)) {
    auto it = fv.find(name);
    if (it == fv.end())
      fv.emplace(name, sort);
    else if (it->second != sort)
      throw SeqkitError(ErrorKind::SortMismatch,
                        name + " is used with conflicting sorts");
  }
  if (opts.fixed_env)
    for (const auto& [name, value] : *opts.fixed_env) fv.erase(name);

  ValueUniverse universe(bounds);
  ModelEnumerator models(fv, bounds, opts.ceiling);
  EvalConfig cfg_left{left_profile, bounds, opts.arrc_slice};
  EvalConfig cfg_right{right_profile, bounds, opts.arrc_slice};

  EquivResult result;
  ValueEnv env;
  while (models.next(env)) {
    ValueEnv base = with_fixed(env, opts);
    TrailSink sink(universe, opts.preset_tokens);
    do {
      if (result.evaluations >= opts.ceiling) {
        result.unknown = true;
        result.reason = ceiling_reason(opts.ceiling);
        return result;
      }
      // One shared sink for both sides: a read both sides perform resolves
      // to one token value, so congruent positions agree by construction.
      Value lv = eval(left, base, sink, cfg_left);
      Value rv = eval(right, base, sink, cfg_right);
      result.evaluations += 2;
      if (!lv.equals(rv)) {
        EquivWitness w;
        w.model.base = env;
        sink.collect(w.model.tokens);
        w.left = std::move(lv);
        w.right = std::move(rv);
        result.witnesses.push_back(std::move(w));
        if (!collect_all) {
          result.equivalent = false;
          return result;
        }
      }
    } while (sink.advance());
  }
  result.equivalent = result.witnesses.empty();
  return result;
}

EquivResult check_equiv_bounded(const Term& left, const Term& right,
                                const Bounds& bounds, SemanticsProfile profile,
                                const OracleOptions& opts, bool collect_all) {
  return check_equiv_bounded(left, right, bounds, profile, profile, opts,
                             collect_all);
}

std::vector<EquivWitness> diff_profiles(const Term& t, const Bounds& bounds,
                                        SemanticsProfile a, SemanticsProfile b,
                                        const OracleOptions& opts) {
  EquivResult r = check_equiv_bounded(t, t, bounds, a, b, opts, true);
  if (r.unknown) throw SeqkitError(ErrorKind::Resource, r.reason);
  return std::move(r.witnesses);
}

}  // namespace seqkit
