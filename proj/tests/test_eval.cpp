#include <doctest.h>

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "seqkit/seqkit.hpp"

using namespace seqkit;

namespace {

using VL = std::vector<long long>;

Sort I() { return Sort::integer(); }
Sort SI() { return Sort::seq(I()); }
Sort E() { return Sort::elem("E"); }

Value iv(long long v) { return Value::integer(v); }

Value sv(const VL& xs) {
  std::vector<Value> elems;
  for (long long x : xs) elems.push_back(iv(x));
  return Value::seq(I(), std::move(elems));
}

VL unseq(const Value& v) {
  VL out;
  for (const auto& e : v.seq().elems) out.push_back(e.as_int());
  return out;
}

const TokenAssignment kNoTokens;

Value run(const Term& t, const ValueEnv& env, SemanticsProfile p,
          const Bounds& b = Bounds{},
          SliceConvention conv = SliceConvention::Inclusive) {
  EvalConfig cfg{p, b, conv};
  StrictTokenSink sink(kNoTokens);
  return eval(t, env, sink, cfg);
}

Value runsym(const Term& t, const ValueEnv& env, SemanticsProfile p,
             const Bounds& b = Bounds{}) {
  EvalConfig cfg{p, b, SliceConvention::Inclusive};
  SymbolicTokenSink sink;
  return eval(t, env, sink, cfg);
}

// Every sequence over `elems` with length <= max_len, shortest first.
std::vector<VL> all_seqs(int max_len, const VL& elems) {
  std::vector<VL> out{{}};
  size_t lo = 0;
  for (int l = 1; l <= max_len; ++l) {
    size_t hi = out.size();
    for (size_t k = lo; k < hi; ++k)
      for (long long e : elems) {
        VL next = out[k];
        next.push_back(e);
        out.push_back(std::move(next));
      }
    lo = hi;
  }
  return out;
}

// ---- test-local reference semantics (independent brute force) ----

VL ref_slice_inclusive(const VL& s, long long a, long long b) {
  long long lo = std::max<long long>(a, 0);
  long long hi = std::min<long long>(b, (long long)s.size() - 1);
  VL out;
  for (long long j = lo; j <= hi; ++j) out.push_back(s[(size_t)j]);
  return out;
}

VL ref_extract(const VL& s, long long i, long long l) {
  long long n = (long long)s.size();
  if (i < 0 || i >= n || l <= 0) return {};
  VL out;
  for (long long j = i; j < std::min(i + l, n); ++j) out.push_back(s[(size_t)j]);
  return out;
}

VL ref_slice_exclusive(const VL& s, long long a, long long b) {
  long long lo = std::max<long long>(a, 0);
  long long hi = std::min<long long>(b, (long long)s.size()) - 1;
  VL out;
  for (long long j = lo; j <= hi; ++j) out.push_back(s[(size_t)j]);
  return out;
}

VL ref_update_proposal(const VL& s1, long long i, const VL& s2) {
  VL out = s1;
  for (long long j = 0; j < (long long)s1.size(); ++j)
    if (i <= j && j < i + (long long)s2.size()) out[(size_t)j] = s2[(size_t)(j - i)];
  return out;
}

VL ref_update_cvc5(const VL& s1, long long i, const VL& s2) {
  if (i < 0 || i >= (long long)s1.size()) return s1;
  return ref_update_proposal(s1, i, s2);
}

bool ref_occurs_at(const VL& hay, const VL& needle, long long p) {
  if (p < 0 || p + (long long)needle.size() > (long long)hay.size()) return false;
  for (size_t k = 0; k < needle.size(); ++k)
    if (hay[(size_t)p + k] != needle[k]) return false;
  return true;
}

// contains(s1, s2): s1 occurs as a contiguous factor of s2.
bool ref_contains(const VL& s1, const VL& s2) {
  for (long long p = 0; p + (long long)s1.size() <= (long long)s2.size(); ++p)
    if (ref_occurs_at(s2, s1, p)) return true;
  return false;
}

long long ref_indexof(const VL& s, const VL& pat, long long st) {
  long long from = std::max<long long>(st, 0);
  if (pat.empty()) return from <= (long long)s.size() ? from : -1;
  for (long long p = from; p + (long long)pat.size() <= (long long)s.size(); ++p)
    if (ref_occurs_at(s, pat, p)) return p;
  return -1;
}

VL ref_replace(const VL& s, const VL& pat, const VL& rep) {
  if (pat.empty()) {
    VL out = rep;
    out.insert(out.end(), s.begin(), s.end());
    return out;
  }
  for (long long p = 0; p + (long long)pat.size() <= (long long)s.size(); ++p)
    if (ref_occurs_at(s, pat, p)) {
      VL out(s.begin(), s.begin() + p);
      out.insert(out.end(), rep.begin(), rep.end());
      out.insert(out.end(), s.begin() + p + pat.size(), s.end());
      return out;
    }
  return s;
}

VL ref_replace_all(const VL& s, const VL& pat, const VL& rep) {
  if (pat.empty()) return s;
  VL out;
  long long p = 0;
  while (p < (long long)s.size()) {
    if (ref_occurs_at(s, pat, p)) {
      out.insert(out.end(), rep.begin(), rep.end());
      p += (long long)pat.size();
    } else {
      out.push_back(s[(size_t)p]);
      ++p;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("access family: len, get, at") {
  Term s = mk::var("s", SI());
  Term i = mk::var("i", I());
  Term len_t = mk::len(s);
  Term get_t = mk::get(s, i);
  Term at_t = mk::at(s, i);

  CHECK(run(mk::len(mk::empty(I())), {}, SemanticsProfile::Proposal).as_int() ==
        0);
  CHECK(unseq(run(mk::unit(mk::int_lit(5)), {}, SemanticsProfile::Proposal)) ==
        VL{5});
  CHECK(run(get_t, {{"s", sv({7, 9})}, {"i", iv(1)}},
            SemanticsProfile::Proposal)
            .as_int() == 9);

  // Out of bounds: a token under the underspecifying profiles.
  Value out = runsym(get_t, {{"s", sv({7, 9})}, {"i", iv(5)}},
                     SemanticsProfile::Proposal);
  REQUIRE(out.is_unspecified());
  CHECK(out.token().symbol == "seq.get");
  REQUIRE(out.token().args.size() == 2);
  CHECK(out.token().args[0].equals(sv({7, 9})));
  CHECK(out.token().args[1].equals(iv(5)));
  CHECK(runsym(get_t, {{"s", sv({7, 9})}, {"i", iv(-1)}},
               SemanticsProfile::Cvc5)
            .is_unspecified());
  CHECK(runsym(get_t, {{"s", sv({})}, {"i", iv(0)}}, SemanticsProfile::Z3)
            .is_unspecified());

  // ... and the configured default under the overspecifying profile.
  CHECK(run(get_t, {{"s", sv({7, 9})}, {"i", iv(5)}}, SemanticsProfile::ArrayC)
            .as_int() == 0);
  Bounds b;
  b.delta_int = 1;
  CHECK(run(get_t, {{"s", sv({7, 9})}, {"i", iv(5)}}, SemanticsProfile::ArrayC,
            b)
            .as_int() == 1);

  CHECK(unseq(run(at_t, {{"s", sv({7, 9})}, {"i", iv(5)}},
                  SemanticsProfile::Proposal)) == VL{});
  CHECK(unseq(run(at_t, {{"s", sv({7, 9})}, {"i", iv(0)}},
                  SemanticsProfile::Proposal)) == VL{7});
  CHECK(unseq(run(at_t, {{"s", sv({7, 9})}, {"i", iv(-1)}},
                  SemanticsProfile::ArrayC)) == VL{});

  for (const VL& xs : all_seqs(3, {0, 1})) {
    CHECK(run(len_t, {{"s", sv(xs)}}, SemanticsProfile::Z3).as_int() ==
          (long long)xs.size());
    for (long long idx = -2; idx <= 4; ++idx) {
      ValueEnv env{{"s", sv(xs)}, {"i", iv(idx)}};
      bool in = idx >= 0 && idx < (long long)xs.size();
      VL want_at = in ? VL{xs[(size_t)idx]} : VL{};
      for (auto p : {SemanticsProfile::Proposal, SemanticsProfile::Cvc5,
                     SemanticsProfile::Z3, SemanticsProfile::ArrayC})
        CHECK(unseq(run(at_t, env, p)) == want_at);
      if (in)
        CHECK(run(get_t, env, SemanticsProfile::Proposal).as_int() ==
              xs[(size_t)idx]);
      else
        CHECK(run(get_t, env, SemanticsProfile::ArrayC).as_int() == 0);
    }
  }
}

TEST_CASE("token congruence at the value level") {
  Term s = mk::var("s", SI());
  Term same = mk::eq(mk::get(s, mk::int_lit(5)), mk::get(s, mk::int_lit(5)));
  Term diff = mk::eq(mk::get(s, mk::int_lit(5)), mk::get(s, mk::int_lit(6)));
  ValueEnv env{{"s", sv({7})}};

  CHECK(runsym(same, env, SemanticsProfile::Proposal).as_bool());
  // Distinct tokens cannot be compared without an assignment.
  CHECK_THROWS_AS(runsym(diff, env, SemanticsProfile::Proposal), SeqkitError);

  // With an assignment both verdicts ground out.
  TokenAssignment tok;
  tok[TokenKey{"seq.get", {sv({7}), iv(5)}}] = iv(1);
  tok[TokenKey{"seq.get", {sv({7}), iv(6)}}] = iv(2);
  StrictTokenSink sink(tok);
  EvalConfig cfg{SemanticsProfile::Proposal, Bounds{},
                 SliceConvention::Inclusive};
  CHECK(eval(same, env, sink, cfg).as_bool());
  CHECK_FALSE(eval(diff, env, sink, cfg).as_bool());

  // A missing key in strict mode fails loudly.
  TokenAssignment half;
  half[TokenKey{"seq.get", {sv({7}), iv(5)}}] = iv(1);
  StrictTokenSink strict(half);
  CHECK_THROWS_AS(eval(diff, env, strict, cfg), SeqkitError);
}

TEST_CASE("set: in-bounds write, out-of-bounds identity") {
  Term t = mk::set(mk::var("s", SI()), mk::var("i", I()), mk::var("v", I()));

  auto set_at = [&](const VL& s, long long i, long long v) {
    return unseq(run(t, {{"s", sv(s)}, {"i", iv(i)}, {"v", iv(v)}},
                     SemanticsProfile::Proposal));
  };
  CHECK(set_at({7, 9}, 0, 5) == VL{5, 9});
  CHECK(set_at({7, 9}, -1, 5) == VL{7, 9});
  CHECK(set_at({}, 0, 5) == VL{});

  for (const VL& xs : all_seqs(3, {0, 1}))
    for (long long i = -2; i <= 4; ++i)
      for (long long v : {0, 1}) {
        VL want = xs;
        if (i >= 0 && i < (long long)xs.size()) want[(size_t)i] = v;
        ValueEnv env{{"s", sv(xs)}, {"i", iv(i)}, {"v", iv(v)}};
        CHECK(unseq(run(t, env, SemanticsProfile::Proposal)) == want);
        CHECK(unseq(run(t, env, SemanticsProfile::ArrayC)) == want);
      }

  CHECK_THROWS_AS(run(t, {{"s", sv({1})}, {"i", iv(0)}, {"v", iv(0)}},
                      SemanticsProfile::Cvc5),
                  SeqkitError);
}

TEST_CASE("const and unit") {
  Term t = mk::const_(mk::var("l", I()), mk::var("v", I()));
  auto konst = [&](long long l, long long v) {
    return unseq(
        run(t, {{"l", iv(l)}, {"v", iv(v)}}, SemanticsProfile::Proposal));
  };
  CHECK(konst(3, 5) == VL{5, 5, 5});
  CHECK(konst(-2, 5) == VL{});
  CHECK(konst(0, 9) == VL{});

  // unit(v) = const(1, v), and the builder length law len = max(l, 0).
  for (long long v : {-1, 0, 3}) {
    CHECK(konst(1, v) == VL{v});
    for (long long l = -2; l <= 4; ++l)
      CHECK((long long)konst(l, v).size() == std::max<long long>(l, 0));
  }

  // The resource cap rejects astronomically long builds.
  CHECK_THROWS_AS(run(mk::const_(mk::int_lit(2'000'000), mk::int_lit(0)), {},
                      SemanticsProfile::Proposal),
                  SeqkitError);
}

TEST_CASE("slice: clamped inclusive, extract, and the array conventions") {
  Term t = mk::slice(mk::var("s", SI()), mk::var("a", I()), mk::var("b", I()));
  auto slice_p = [&](const VL& s, long long a, long long b) {
    return unseq(run(t, {{"s", sv(s)}, {"a", iv(a)}, {"b", iv(b)}},
                     SemanticsProfile::Proposal));
  };
  CHECK(slice_p({7, 9, 4}, -1, 1) == VL{7, 9});
  CHECK(slice_p({7, 9, 4}, 2, 1) == VL{});
  CHECK(slice_p({7, 9, 4}, -5, 10) == VL{7, 9, 4});

  auto slice_c = [&](const VL& s, long long a, long long b) {
    return unseq(run(t, {{"s", sv(s)}, {"a", iv(a)}, {"b", iv(b)}},
                     SemanticsProfile::Cvc5));
  };
  CHECK(slice_c({7, 9, 4}, 1, 5) == VL{9, 4});

  for (const VL& xs : all_seqs(3, {0, 1}))
    for (long long a = -3; a <= 4; ++a)
      for (long long b = -3; b <= 4; ++b) {
        ValueEnv env{{"s", sv(xs)}, {"a", iv(a)}, {"b", iv(b)}};
        CAPTURE(a);
        CAPTURE(b);
        CHECK(unseq(run(t, env, SemanticsProfile::Proposal)) ==
              ref_slice_inclusive(xs, a, b));
        CHECK(unseq(run(t, env, SemanticsProfile::Cvc5)) ==
              ref_extract(xs, a, b));
        CHECK(unseq(run(t, env, SemanticsProfile::Z3)) ==
              ref_extract(xs, a, b));
        CHECK(unseq(run(t, env, SemanticsProfile::ArrayC)) ==
              ref_slice_inclusive(xs, a, b));
        CHECK(unseq(run(t, env, SemanticsProfile::ArrayC, Bounds{},
                        SliceConvention::Exclusive)) ==
              ref_slice_exclusive(xs, a, b));
      }
}

TEST_CASE("update: clipped overlay vs guarded overlay") {
  Term t = mk::update(mk::var("s1", SI()), mk::var("i", I()),
                      mk::var("s2", SI()));
  auto upd = [&](SemanticsProfile p, const VL& s1, long long i, const VL& s2) {
    return unseq(
        run(t, {{"s1", sv(s1)}, {"i", iv(i)}, {"s2", sv(s2)}}, p));
  };

  CHECK(upd(SemanticsProfile::Proposal, {1, 2, 3, 4}, -1, {8, 9}) ==
        VL{9, 2, 3, 4});
  CHECK(upd(SemanticsProfile::Cvc5, {1, 2, 3, 4}, -1, {8, 9}) ==
        VL{1, 2, 3, 4});
  CHECK(upd(SemanticsProfile::Proposal, {1, 2, 3, 4}, 3, {8, 9}) ==
        VL{1, 2, 3, 8});
  CHECK(upd(SemanticsProfile::Cvc5, {1, 2, 3, 4}, 3, {8, 9}) ==
        VL{1, 2, 3, 8});

  auto seqs = all_seqs(3, {0, 1});
  for (const VL& s1 : seqs)
    for (const VL& s2 : seqs)
      for (long long i = -4; i <= 4; ++i) {
        ValueEnv env{{"s1", sv(s1)}, {"i", iv(i)}, {"s2", sv(s2)}};
        CHECK(unseq(run(t, env, SemanticsProfile::Proposal)) ==
              ref_update_proposal(s1, i, s2));
        CHECK(unseq(run(t, env, SemanticsProfile::Cvc5)) ==
              ref_update_cvc5(s1, i, s2));
        // Empty write window: the proposal overlay is the identity.
        if (s2.empty())
          CHECK(unseq(run(t, env, SemanticsProfile::Proposal)) == s1);
      }

  CHECK_THROWS_AS(upd(SemanticsProfile::Z3, {1}, 0, {0}), SeqkitError);
  CHECK_THROWS_AS(upd(SemanticsProfile::ArrayC, {1}, 0, {0}), SeqkitError);
}

TEST_CASE("concat") {
  Term two = mk::concat({mk::var("a", SI()), mk::var("b", SI())});
  CHECK(unseq(run(mk::concat({mk::unit(mk::int_lit(1)),
                              mk::unit(mk::int_lit(2)),
                              mk::unit(mk::int_lit(3))}),
                  {}, SemanticsProfile::Cvc5)) == VL{1, 2, 3});
  for (const VL& a : all_seqs(2, {0, 1}))
    for (const VL& b : all_seqs(2, {0, 1})) {
      VL want = a;
      want.insert(want.end(), b.begin(), b.end());
      Value got = run(two, {{"a", sv(a)}, {"b", sv(b)}},
                      SemanticsProfile::ArrayC);
      CHECK(unseq(got) == want);
      CHECK((long long)got.seq().elems.size() ==
            (long long)a.size() + (long long)b.size());
    }
}

TEST_CASE("string-like family against brute force") {
  Term s1 = mk::var("s1", SI());
  Term s2 = mk::var("s2", SI());
  Term s3 = mk::var("s3", SI());
  Term i = mk::var("i", I());
  Term contains_t = mk::app(SymbolId::SeqContains, {s1, s2});
  Term indexof_t = mk::app(SymbolId::SeqIndexof, {s1, s2, i});
  Term replace_t = mk::app(SymbolId::SeqReplace, {s1, s2, s3});
  Term replace_all_t = mk::app(SymbolId::SeqReplaceAll, {s1, s2, s3});
  Term prefixof_t = mk::app(SymbolId::SeqPrefixof, {s1, s2});
  Term suffixof_t = mk::app(SymbolId::SeqSuffixof, {s1, s2});
  Term rev_t = mk::app(SymbolId::SeqRev, {s1});

  // Frozen examples.
  CHECK(run(indexof_t, {{"s1", sv({7, 9, 7})}, {"s2", sv({7})}, {"i", iv(1)}},
            SemanticsProfile::Proposal)
            .as_int() == 2);
  CHECK(run(indexof_t, {{"s1", sv({7, 9})}, {"s2", sv({4})}, {"i", iv(0)}},
            SemanticsProfile::Z3)
            .as_int() == -1);
  CHECK(unseq(run(replace_t,
                  {{"s1", sv({7, 9, 7})}, {"s2", sv({7})}, {"s3", sv({5, 5})}},
                  SemanticsProfile::Cvc5)) == VL{5, 5, 9, 7});
  CHECK(unseq(run(rev_t, {{"s1", sv({1, 2, 3})}},
                  SemanticsProfile::Proposal)) == VL{3, 2, 1});

  auto seqs = all_seqs(3, {0, 1});
  for (const VL& a : seqs) {
    VL r = a;
    std::reverse(r.begin(), r.end());
    CHECK(unseq(run(rev_t, {{"s1", sv(a)}}, SemanticsProfile::Cvc5)) == r);
    for (const VL& b : seqs) {
      ValueEnv env{{"s1", sv(a)}, {"s2", sv(b)}};
      CHECK(run(contains_t, env, SemanticsProfile::Proposal).as_bool() ==
            ref_contains(a, b));
      bool is_pre = a.size() <= b.size() &&
                    std::equal(a.begin(), a.end(), b.begin());
      bool is_suf = a.size() <= b.size() &&
                    std::equal(a.rbegin(), a.rend(), b.rbegin());
      CHECK(run(prefixof_t, env, SemanticsProfile::Cvc5).as_bool() == is_pre);
      CHECK(run(suffixof_t, env, SemanticsProfile::Z3).as_bool() == is_suf);
      for (long long st = -2; st <= 4; ++st) {
        env["i"] = iv(st);
        CHECK(run(indexof_t, env, SemanticsProfile::Proposal).as_int() ==
              ref_indexof(a, b, st));
      }
    }
  }

  // Replacement over a denser pattern space, two-valued alphabet.
  for (const VL& a : seqs)
    for (const VL& pat : all_seqs(2, {0, 1}))
      for (const VL& rep : all_seqs(2, {0, 1})) {
        ValueEnv env{{"s1", sv(a)}, {"s2", sv(pat)}, {"s3", sv(rep)}};
        CAPTURE(a);
        CAPTURE(pat);
        CAPTURE(rep);
        CHECK(unseq(run(replace_t, env, SemanticsProfile::Proposal)) ==
              ref_replace(a, pat, rep));
        CHECK(unseq(run(replace_all_t, env, SemanticsProfile::Cvc5)) ==
              ref_replace_all(a, pat, rep));
      }

  // prefixof([], s) holds for every s.
  for (const VL& b : seqs)
    CHECK(run(prefixof_t, {{"s1", sv({})}, {"s2", sv(b)}},
              SemanticsProfile::Proposal)
              .as_bool());

  // Availability: the string-like family stops at the array profile.
  CHECK_THROWS_AS(run(contains_t, {{"s1", sv({})}, {"s2", sv({})}},
                      SemanticsProfile::ArrayC),
                  SeqkitError);
  CHECK_THROWS_AS(run(replace_all_t,
                      {{"s1", sv({})}, {"s2", sv({})}, {"s3", sv({})}},
                      SemanticsProfile::Z3),
                  SeqkitError);
  CHECK_THROWS_AS(run(rev_t, {{"s1", sv({})}}, SemanticsProfile::Z3),
                  SeqkitError);
}

namespace {

Value fn1_plus1() {
  auto def = std::make_shared<FnDef>();
  def->name = "inc";
  def->params = {{"n", I()}};
  def->body = mk::add(mk::var("n", I()), mk::int_lit(1));
  return Value::fn_def(Sort::fn({I()}, I()), def);
}

Value fn2_sum() {
  auto def = std::make_shared<FnDef>();
  def->name = "sum2";
  def->params = {{"a", I()}, {"b", I()}};
  def->body = mk::add(mk::var("a", I()), mk::var("b", I()));
  return Value::fn_def(Sort::fn({I(), I()}, I()), def);
}

Value fn2_first_index() {  // λ(i, x). i
  auto def = std::make_shared<FnDef>();
  def->name = "ix";
  def->params = {{"i", I()}, {"x", I()}};
  def->body = mk::var("i", I());
  return Value::fn_def(Sort::fn({I(), I()}, I()), def);
}

Value fn2_second() {  // λ(i, x). x
  auto def = std::make_shared<FnDef>();
  def->name = "snd";
  def->params = {{"i", I()}, {"x", I()}};
  def->body = mk::var("x", I());
  return Value::fn_def(Sort::fn({I(), I()}, I()), def);
}

}  // namespace

TEST_CASE("map: positionwise application, shortest input wins") {
  Term f = mk::var("f", Sort::fn({I()}, I()));
  Term g = mk::var("g", Sort::fn({I(), I()}, I()));
  Term s = mk::var("s", SI());
  Term u = mk::var("u", SI());
  Term map1 = mk::app(SymbolId::SeqMap, {f, s});
  Term map2 = mk::app(SymbolId::SeqMap, {g, s, u});

  CHECK(unseq(run(map1, {{"f", fn1_plus1()}, {"s", sv({1, 2, 3})}},
                  SemanticsProfile::Proposal)) == VL{2, 3, 4});
  CHECK(unseq(run(map2,
                  {{"g", fn2_sum()}, {"s", sv({1, 2, 3})}, {"u", sv({10, 20})}},
                  SemanticsProfile::Proposal)) == VL{11, 22});
  CHECK(unseq(run(map1, {{"f", fn1_plus1()}, {"s", sv({})}},
                  SemanticsProfile::Z3)) == VL{});

  for (const VL& xs : all_seqs(3, {0, 1, 2})) {
    VL want;
    for (long long x : xs) want.push_back(x + 1);
    for (auto p : {SemanticsProfile::Proposal, SemanticsProfile::Z3,
                   SemanticsProfile::ArrayC})
      CHECK(unseq(run(map1, {{"f", fn1_plus1()}, {"s", sv(xs)}}, p)) == want);
  }

  // n-ary map is a proposal/array extension; z3 keeps the unary form only.
  CHECK_THROWS_AS(run(map2,
                      {{"g", fn2_sum()}, {"s", sv({1})}, {"u", sv({1})}},
                      SemanticsProfile::Z3),
                  SeqkitError);
  CHECK_THROWS_AS(run(map1, {{"f", fn1_plus1()}, {"s", sv({1})}},
                      SemanticsProfile::Cvc5),
                  SeqkitError);
}

TEST_CASE("mapi: offset windows and out-of-bounds reads") {
  Term h = mk::var("h", Sort::fn({I(), I()}, I()));
  Term o = mk::var("o", I());
  Term s = mk::var("s", SI());
  Term mapi1 = mk::app(SymbolId::SeqMapi, {h, o, s});

  CHECK(unseq(run(mapi1,
                  {{"h", fn2_first_index()}, {"o", iv(0)}, {"s", sv({9, 9, 9})}},
                  SemanticsProfile::Proposal)) == VL{0, 1, 2});
  CHECK(unseq(run(mapi1, {{"h", fn2_sum()}, {"o", iv(5)}, {"s", sv({1, 2})}},
                  SemanticsProfile::Z3)) == VL{});

  // Positive offsets shorten the result from the front.
  CHECK(unseq(run(mapi1,
                  {{"h", fn2_second()}, {"o", iv(1)}, {"s", sv({4, 5, 6})}},
                  SemanticsProfile::Proposal)) == VL{5, 6});

  // A negative offset reaches before the sequence: those positions read as
  // get-tokens, congruent with seq.get at the same index.
  Value v = runsym(mapi1,
                   {{"h", fn2_second()}, {"o", iv(-1)}, {"s", sv({5})}},
                   SemanticsProfile::Proposal);
  REQUIRE(v.seq().elems.size() == 2);
  REQUIRE(v.seq().elems[0].is_unspecified());
  CHECK(v.seq().elems[0].token().symbol == "seq.get");
  CHECK(v.seq().elems[0].token().args[1].equals(iv(-1)));
  CHECK(v.seq().elems[1].as_int() == 5);

  CHECK_THROWS_AS(run(mapi1,
                      {{"h", fn2_sum()}, {"o", iv(0)}, {"s", sv({1})}},
                      SemanticsProfile::Cvc5),
                  SeqkitError);
  CHECK_THROWS_AS(run(mapi1,
                      {{"h", fn2_sum()}, {"o", iv(0)}, {"s", sv({1})}},
                      SemanticsProfile::ArrayC),
                  SeqkitError);
}

TEST_CASE("folds") {
  Term fl = mk::var("fl", Sort::fn({I(), I()}, I()));
  Term b = mk::var("b", I());
  Term s = mk::var("s", SI());
  Term fold_t = mk::app(SymbolId::SeqFoldLeft, {fl, b, s});

  CHECK(run(fold_t, {{"fl", fn2_sum()}, {"b", iv(0)}, {"s", sv({1, 2, 3})}},
            SemanticsProfile::Proposal)
            .as_int() == 6);
  CHECK(run(fold_t, {{"fl", fn2_sum()}, {"b", iv(9)}, {"s", sv({})}},
            SemanticsProfile::Z3)
            .as_int() == 9);

  // fold_lefti feeds o+position as the leading argument; the table carries
  // exactly the reached tuples of λ(i,a,x). a + i*x.
  auto table = std::make_shared<FnTableData>();
  table->entries.push_back({{iv(0), iv(0), iv(5)}, iv(0)});
  table->entries.push_back({{iv(1), iv(0), iv(5)}, iv(5)});
  Value fli = Value::fn_table(Sort::fn({I(), I(), I()}, I()), table);
  Term fli_v = mk::var("fli", Sort::fn({I(), I(), I()}, I()));
  Term foldi_t =
      mk::app(SymbolId::SeqFoldLefti, {fli_v, mk::int_lit(0), b, s});
  CHECK(run(foldi_t, {{"fli", fli}, {"b", iv(0)}, {"s", sv({5, 5})}},
            SemanticsProfile::Proposal)
            .as_int() == 5);

  // A tuple outside the table is a hard error, not a guess.
  CHECK_THROWS_AS(run(foldi_t, {{"fli", fli}, {"b", iv(1)}, {"s", sv({5, 5})}},
                      SemanticsProfile::Proposal),
                  SeqkitError);

  CHECK_THROWS_AS(run(fold_t, {{"fl", fn2_sum()}, {"b", iv(0)}, {"s", sv({})}},
                      SemanticsProfile::Cvc5),
                  SeqkitError);
}

TEST_CASE("get_default ignores the default exactly in bounds") {
  Term t = mk::app(SymbolId::SeqGetDefault,
                   {mk::var("s", SI()), mk::var("i", I()), mk::var("d", I())});
  auto gd = [&](SemanticsProfile p, const VL& s, long long i, long long d) {
    return run(t, {{"s", sv(s)}, {"i", iv(i)}, {"d", iv(d)}}, p).as_int();
  };
  CHECK(gd(SemanticsProfile::Proposal, {7}, 0, 99) == 7);
  CHECK(gd(SemanticsProfile::Proposal, {7}, 3, 99) == 99);
  for (long long i = -2; i <= 4; ++i)
    for (auto p : {SemanticsProfile::Proposal, SemanticsProfile::Cvc5,
                   SemanticsProfile::Z3, SemanticsProfile::ArrayC})
      CHECK(gd(p, {}, i, 42) == 42);
}

TEST_CASE("array-with-concat vocabulary") {
  Term s = mk::var("s", SI());
  Term u = mk::var("u", SI());
  Term i = mk::var("i", I());
  Term v = mk::var("v", I());
  auto A = SemanticsProfile::ArrayC;

  CHECK(run(mk::app(SymbolId::ArrcLength, {s}), {{"s", sv({4, 4})}}, A)
            .as_int() == 2);

  Term nth = mk::app(SymbolId::ArrcNth, {s, i});
  CHECK(run(nth, {{"s", sv({7, 9})}, {"i", iv(1)}}, A).as_int() == 9);
  CHECK(run(nth, {{"s", sv({7, 9})}, {"i", iv(9)}}, A).as_int() == 0);
  Bounds bd;
  bd.delta_int = 2;
  CHECK(run(nth, {{"s", sv({7, 9})}, {"i", iv(-1)}}, A, bd).as_int() == 2);

  Term rep = mk::app(SymbolId::ArrcRepeat, {v, i});
  CHECK(unseq(run(rep, {{"v", iv(3)}, {"i", iv(2)}}, A)) == VL{3, 3});
  CHECK(unseq(run(rep, {{"v", iv(3)}, {"i", iv(0)}}, A)) == VL{});
  CHECK(unseq(run(rep, {{"v", iv(3)}, {"i", iv(-2)}}, A)) == VL{});

  Term app2 = mk::app(SymbolId::ArrcApp, {s, u});
  CHECK(unseq(run(app2, {{"s", sv({1})}, {"u", sv({2, 3})}}, A)) ==
        VL{1, 2, 3});

  Term upd = mk::app(SymbolId::ArrcUpdate, {i, s, v});
  CHECK(unseq(run(upd, {{"i", iv(1)}, {"s", sv({7, 9})}, {"v", iv(5)}}, A)) ==
        VL{7, 5});
  CHECK(unseq(run(upd, {{"i", iv(4)}, {"s", sv({7, 9})}, {"v", iv(5)}}, A)) ==
        VL{7, 9});

  Term slc = mk::app(SymbolId::ArrcSlice, {s, i, v});
  for (const VL& xs : all_seqs(3, {0, 1}))
    for (long long a = -2; a <= 4; ++a)
      for (long long b2 = -2; b2 <= 4; ++b2) {
        ValueEnv env{{"s", sv(xs)}, {"i", iv(a)}, {"v", iv(b2)}};
        CHECK(unseq(run(slc, env, A)) == ref_slice_inclusive(xs, a, b2));
        CHECK(unseq(run(slc, env, A, Bounds{}, SliceConvention::Exclusive)) ==
              ref_slice_exclusive(xs, a, b2));
      }

  Term amap = mk::app(SymbolId::ArrcMap, {mk::var("f", Sort::fn({I()}, I())), s});
  CHECK(unseq(run(amap, {{"f", fn1_plus1()}, {"s", sv({1, 2})}}, A)) ==
        VL{2, 3});

  // The array vocabulary exists only under the array profile.
  CHECK_THROWS_AS(run(nth, {{"s", sv({1})}, {"i", iv(0)}},
                      SemanticsProfile::Proposal),
                  SeqkitError);
  CHECK_THROWS_AS(run(app2, {{"s", sv({1})}, {"u", sv({1})}},
                      SemanticsProfile::Cvc5),
                  SeqkitError);
}

TEST_CASE("element-sorted sequences use the declared domain") {
  Sort e = E();
  Sort se = Sort::seq(e);
  Term s = mk::var("s", se);
  Term i = mk::var("i", I());
  Value es = Value::seq(e, {Value::elem(e, 1), Value::elem(e, 0)});

  CHECK(run(mk::get(s, i), {{"s", es}, {"i", iv(0)}},
            SemanticsProfile::Proposal)
            .elem_index() == 1);
  // delta of an element sort is element #0.
  CHECK(run(mk::get(s, i), {{"s", es}, {"i", iv(7)}}, SemanticsProfile::ArrayC)
            .elem_index() == 0);
  Value dseq = delta_value(se, Bounds{});
  CHECK(dseq.seq().elems.empty());
  CHECK(delta_value(e, Bounds{}).elem_index() == 0);
  CHECK(delta_value(Sort::boolean(), Bounds{}).as_bool() == false);
  Bounds bd;
  bd.delta_int = 3;
  CHECK(delta_value(I(), bd).as_int() == 3);
}

TEST_CASE("quantifiers enumerate the integer window") {
  Term s = mk::var("s", SI());
  Term q = mk::var("q", I());
  Term guarded = mk::forall(
      "q", mk::implies(mk::and_({mk::le(mk::int_lit(0), q),
                                 mk::lt(q, mk::len(s))}),
                       mk::eq(mk::get(s, q), mk::int_lit(1))));
  CHECK(run(guarded, {{"s", sv({1, 1})}}, SemanticsProfile::Proposal)
            .as_bool());
  CHECK_FALSE(run(guarded, {{"s", sv({1, 0})}}, SemanticsProfile::Proposal)
                  .as_bool());

  // The default window is [-2, 4]: a bound of 4 holds, 3 does not.
  CHECK(run(mk::forall("q", mk::le(q, mk::int_lit(4))), {},
            SemanticsProfile::Proposal)
            .as_bool());
  CHECK_FALSE(run(mk::forall("q", mk::le(q, mk::int_lit(3))), {},
                  SemanticsProfile::Proposal)
                  .as_bool());
}

TEST_CASE("checked arithmetic surfaces overflow as a resource error") {
  Term big = mk::int_lit(8'000'000'000'000'000'000LL);
  CHECK_THROWS_AS(run(mk::add(big, big), {}, SemanticsProfile::Proposal),
                  SeqkitError);
  CHECK_THROWS_AS(run(mk::mul(mk::int_lit(4'000'000'000LL),
                              mk::var("i", I())),
                      {{"i", iv(4'000'000'000LL)}},
                      SemanticsProfile::Proposal),
                  SeqkitError);
  CHECK(run(mk::sub(mk::int_lit(-2), mk::int_lit(3)), {},
            SemanticsProfile::Proposal)
            .as_int() == -5);
}

TEST_CASE("in-domain profile agreement on shared symbols") {
  // Where no partial function leaves its domain, the four profiles agree
  // on every symbol they share.
  Term s = mk::var("s", SI());
  Term u = mk::var("u", SI());
  Term i = mk::var("i", I());
  auto profiles = {SemanticsProfile::Proposal, SemanticsProfile::Cvc5,
                   SemanticsProfile::Z3, SemanticsProfile::ArrayC};
  auto seqs = all_seqs(2, {0, 1});
  for (const VL& a : seqs)
    for (const VL& b : seqs) {
      ValueEnv env{{"s", sv(a)}, {"u", sv(b)}};
      Value c0 = run(mk::concat({s, u}), env, SemanticsProfile::Proposal);
      Value l0 = run(mk::len(s), env, SemanticsProfile::Proposal);
      for (auto p : profiles) {
        CHECK(run(mk::concat({s, u}), env, p).equals(c0));
        CHECK(run(mk::len(s), env, p).equals(l0));
      }
      for (long long idx = 0; idx < (long long)a.size(); ++idx) {
        env["i"] = iv(idx);
        Value g0 = run(mk::get(s, i), env, SemanticsProfile::Proposal);
        Value a0 = run(mk::at(s, i), env, SemanticsProfile::Proposal);
        for (auto p : profiles) {
          CHECK(run(mk::get(s, i), env, p).equals(g0));
          CHECK(run(mk::at(s, i), env, p).equals(a0));
        }
      }
    }
}
