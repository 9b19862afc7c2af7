#include <doctest.h>

#include <string>
#include <utility>
#include <vector>

#include "seqkit/error.hpp"
#include "seqkit/eval.hpp"
#include "seqkit/oracle.hpp"
#include "seqkit/parser.hpp"
#include "seqkit/printer.hpp"
#include "seqkit/reduction.hpp"
#include "seqkit/term.hpp"
#include "seqkit/value.hpp"

using namespace seqkit;

namespace {

Sort I() { return Sort::integer(); }
Sort B() { return Sort::boolean(); }
Sort E() { return Sort::elem("E"); }

Value iv(long long v) { return Value::integer(v); }
Value ev(int k) { return Value::elem(E(), k); }

Value eseq(const std::vector<int>& idx) {
  std::vector<Value> elems;
  for (int k : idx) elems.push_back(ev(k));
  return Value::seq(E(), std::move(elems));
}

Value iseq(const std::vector<long long>& vs) {
  std::vector<Value> elems;
  for (long long v : vs) elems.push_back(iv(v));
  return Value::seq(I(), std::move(elems));
}

}  // namespace

TEST_CASE("value universe counts follow the bounds") {
  Bounds b;  // max_len 3, window [-2, 4], two elements
  ValueUniverse u(b);
  CHECK(u.count(B()) == 2);
  CHECK(u.count(I()) == 7);
  CHECK(u.count(E()) == 2);
  CHECK(u.count(Sort::seq(E())) == 15);   // 1 + 2 + 4 + 8
  CHECK(u.count(Sort::seq(I())) == 400);  // 1 + 7 + 49 + 343
  CHECK(u.count(Sort::fn({E()}, E())) == 4);

  Bounds shorter;
  shorter.max_len = 2;
  CHECK(ValueUniverse(shorter).count(Sort::seq(E())) == 7);

  // 7 return values over 49 argument tuples overflows; the count saturates.
  CHECK(u.count(Sort::fn({I(), I()}, I())) == (std::uint64_t(1) << 63));
}

TEST_CASE("value universe enumerates deterministically") {
  Bounds b;
  ValueUniverse u(b);
  CHECK(u.at(I(), 0).as_int() == -2);
  CHECK(u.at(I(), 6).as_int() == 4);
  CHECK(u.at(B(), 0).as_bool() == false);
  CHECK(u.at(B(), 1).as_bool() == true);
  CHECK(u.at(E(), 0).elem_index() == 0);
  CHECK(u.at(E(), 1).elem_index() == 1);

  // Sequences go by length, then lexicographically with the first position
  // as the most significant digit.
  Sort se = Sort::seq(E());
  CHECK(u.at(se, 0).equals(eseq({})));
  CHECK(u.at(se, 1).equals(eseq({0})));
  CHECK(u.at(se, 2).equals(eseq({1})));
  CHECK(u.at(se, 3).equals(eseq({0, 0})));
  CHECK(u.at(se, 4).equals(eseq({0, 1})));
  CHECK(u.at(se, 5).equals(eseq({1, 0})));
  CHECK(u.at(se, 6).equals(eseq({1, 1})));
  CHECK(u.at(se, 7).equals(eseq({0, 0, 0})));
  CHECK(u.at(se, 14).equals(eseq({1, 1, 1})));
}

TEST_CASE("function tables enumerate with the first tuple most significant") {
  Bounds b;
  ValueUniverse u(b);
  Sort fs = Sort::fn({E()}, E());

  Value f0 = u.at(fs, 0);  // everything maps to @e0
  REQUIRE(f0.fn_table());
  for (const auto& [args, ret] : f0.fn_table()->entries)
    CHECK(ret.equals(ev(0)));

  Value f1 = u.at(fs, 1);  // identity: only the last digit is set
  const auto& t1 = f1.fn_table()->entries;
  REQUIRE(t1.size() == 2);
  CHECK(t1[0].first[0].equals(ev(0)));
  CHECK(t1[0].second.equals(ev(0)));
  CHECK(t1[1].first[0].equals(ev(1)));
  CHECK(t1[1].second.equals(ev(1)));

  Value f2 = u.at(fs, 2);  // swap
  const auto& t2 = f2.fn_table()->entries;
  CHECK(t2[0].second.equals(ev(1)));
  CHECK(t2[1].second.equals(ev(0)));

  // Binary domain: argument tuples are ordered with the last argument
  // varying fastest.
  Sort gs = Sort::fn({E(), E()}, B());
  Value g0 = u.at(gs, 0);
  const auto& tg = g0.fn_table()->entries;
  REQUIRE(tg.size() == 4);
  CHECK(tg[0].first[0].equals(ev(0)));
  CHECK(tg[0].first[1].equals(ev(0)));
  CHECK(tg[1].first[0].equals(ev(0)));
  CHECK(tg[1].first[1].equals(ev(1)));
  CHECK(tg[2].first[0].equals(ev(1)));
  CHECK(tg[2].first[1].equals(ev(0)));
  CHECK(tg[3].first[0].equals(ev(1)));
  CHECK(tg[3].first[1].equals(ev(1)));
}

TEST_CASE("token domains materialize scalar sorts only") {
  Bounds b;
  ValueUniverse u(b);
  auto ints = u.token_domain(I());
  REQUIRE(ints.size() == 7);
  CHECK(ints.front().as_int() == -2);
  CHECK(ints.back().as_int() == 4);
  CHECK(u.token_domain(E()).size() == 2);
  CHECK(u.token_domain(B()).size() == 2);

  bool threw = false;
  try {
    u.token_domain(Sort::seq(E()));
  } catch (const SeqkitError& e) {
    threw = true;
    CHECK(e.kind() == ErrorKind::Resource);
  }
  CHECK(threw);
  CHECK_THROWS_AS(u.token_domain(Sort::fn({E()}, E())), SeqkitError);
}

TEST_CASE("model enumeration is odometer order over name-sorted variables") {
  Bounds b;
  SortEnv vars{{"a", B()}, {"b", B()}};
  ModelEnumerator en(vars, b, 1000);
  CHECK(en.total() == 4);

  ValueEnv env;
  std::vector<std::pair<bool, bool>> seen;
  while (en.next(env))
    seen.emplace_back(env.at("a").as_bool(), env.at("b").as_bool());
  REQUIRE(seen.size() == 4);
  // The alphabetically later name varies fastest.
  CHECK(seen[0] == std::make_pair(false, false));
  CHECK(seen[1] == std::make_pair(false, true));
  CHECK(seen[2] == std::make_pair(true, false));
  CHECK(seen[3] == std::make_pair(true, true));

  en.reset();
  int again = 0;
  while (en.next(env)) ++again;
  CHECK(again == 4);

  Bounds one;
  one.max_len = 1;
  ModelEnumerator pairs({{"s", Sort::seq(E())}, {"t", Sort::seq(E())}}, one,
                        100);
  CHECK(pairs.total() == 9);  // three sequences per variable
}

TEST_CASE("closed formulas get exactly one empty model") {
  ModelEnumerator en({}, Bounds{}, 10);
  CHECK(en.total() == 1);
  ValueEnv env{{"ghost", iv(1)}};
  REQUIRE(en.next(env));
  CHECK(env.empty());
  CHECK(!en.next(env));
}

TEST_CASE("pre-enumeration ceiling rejects oversized universes") {
  Bounds b;
  SortEnv vars{{"i", I()}, {"j", I()}};  // 49 models
  bool threw = false;
  try {
    ModelEnumerator en(vars, b, 48);
  } catch (const SeqkitError& e) {
    threw = true;
    CHECK(e.kind() == ErrorKind::UniverseTooLarge);
    CHECK(std::string(e.what()).find(
              "the bounded model universe has 49 models, above the ceiling "
              "of 48") != std::string::npos);
  }
  CHECK(threw);

  ModelEnumerator fits(vars, b, 49);  // equal to the ceiling is allowed
  CHECK(fits.total() == 49);
}

TEST_CASE("check_sat_bounded settles closed formulas in one evaluation") {
  Bounds b;
  Verdict t = check_sat_bounded(mk::bool_lit(true), b,
                                SemanticsProfile::Proposal);
  REQUIRE(t.is_sat());
  CHECK(t.model->base.empty());
  CHECK(t.model->tokens.empty());
  CHECK(t.evaluations == 1);

  Verdict f = check_sat_bounded(mk::bool_lit(false), b,
                                SemanticsProfile::Proposal);
  CHECK(f.is_unsat());
  CHECK(f.evaluations == 1);
}

TEST_CASE("check_sat_bounded finds the first witness in enumeration order") {
  Bounds b;
  b.max_len = 2;
  SortEnv vars{{"s", Sort::seq(E())}};
  Term phi = parse_term(
      "(and (= (seq.len s) 2) (= (seq.get s 0) (seq.get s 1)))", vars);
  Verdict v = check_sat_bounded(phi, b, SemanticsProfile::Proposal);
  REQUIRE(v.is_sat());
  REQUIRE(v.model.has_value());
  CHECK(v.model->base.at("s").equals(eseq({0, 0})));
  CHECK(v.model->tokens.empty());  // both reads are in bounds
}

TEST_CASE("no bounded model exceeds max_len") {
  Bounds b;  // max_len 3; the literal 4 still sits inside the window
  SortEnv vars{{"s", Sort::seq(E())}};
  Term phi = parse_term("(= (seq.len s) 4)", vars);
  Verdict v = check_sat_bounded(phi, b, SemanticsProfile::Proposal);
  CHECK(v.is_unsat());
  CHECK(v.evaluations == 15);  // every sequence in the universe was tried
}

TEST_CASE("congruent unspecified reads cannot disagree") {
  Bounds b;
  Term t = mk::get(mk::empty(E()), mk::int_lit(0));
  Term phi = mk::not_(mk::eq(t, t));
  for (auto p : {SemanticsProfile::Proposal, SemanticsProfile::Cvc5,
                 SemanticsProfile::Z3}) {
    Verdict v = check_sat_bounded(phi, b, p);
    CHECK(v.is_unsat());
    CHECK(v.evaluations == 2);  // one read, two candidate element values
  }
  // The total-array semantics reads delta instead of raising a token.
  Verdict va = check_sat_bounded(phi, b, SemanticsProfile::ArrayC);
  CHECK(va.is_unsat());
  CHECK(va.evaluations == 1);
}

TEST_CASE("distinct reads range independently") {
  Bounds b;
  b.int_hi = 6;  // the literal 5 must be inside the window
  Term phi = mk::eq(mk::get(mk::empty(E()), mk::int_lit(0)),
                    mk::get(mk::empty(E()), mk::int_lit(5)));

  ValidityResult p = check_valid_bounded(phi, b, SemanticsProfile::Proposal);
  CHECK(!p.valid);
  REQUIRE(p.counterexample.has_value());
  REQUIRE(p.counterexample->tokens.size() == 2);
  std::vector<Value> vals;
  for (const auto& [key, val] : p.counterexample->tokens) {
    CHECK(key.symbol == "seq.get");
    vals.push_back(val);
  }
  CHECK(!vals[0].equals(vals[1]));

  // Both reads collapse to delta when the semantics is total.
  ValidityResult a = check_valid_bounded(phi, b, SemanticsProfile::ArrayC);
  CHECK(a.valid);
}

TEST_CASE("literals outside the integer window are rejected") {
  Bounds b;  // window [-2, 4]
  SortEnv vars{{"i", I()}};

  bool threw = false;
  try {
    check_sat_bounded(parse_term("(= i 9)", vars), b,
                      SemanticsProfile::Proposal);
  } catch (const SeqkitError& e) {
    threw = true;
    CHECK(e.kind() == ErrorKind::WindowTooSmall);
    CHECK(std::string(e.what()).find(
              "the literal 9 lies outside the integer window [-2, 4]") !=
          std::string::npos);
  }
  CHECK(threw);

  CHECK_THROWS_AS(check_sat_bounded(parse_term("(= i (- 5))", vars), b,
                                    SemanticsProfile::Proposal),
                  SeqkitError);

  // Both sides of an equivalence query are scanned.
  Term l = parse_term("i", vars);
  Term r = parse_term("(+ i 9)", vars);
  CHECK_THROWS_AS(check_equiv_bounded(l, r, b, SemanticsProfile::Proposal),
                  SeqkitError);

  // A literal on the window edge passes.
  CHECK(check_sat_bounded(parse_term("(= i 4)", vars), b,
                          SemanticsProfile::Proposal)
            .is_sat());
}

TEST_CASE("the evaluation ceiling turns into an unknown verdict") {
  Bounds b;
  b.max_len = 2;
  SortEnv vars{{"s", Sort::seq(E())}};
  Term g = parse_term("(seq.get s 2)", vars);
  Term phi = mk::not_(mk::eq(g, g));  // false everywhere, a token per model

  OracleOptions tight;
  tight.ceiling = 7;
  Verdict v = check_sat_bounded(phi, b, SemanticsProfile::Proposal, tight);
  CHECK(v.kind == Verdict::Kind::Unknown);
  CHECK(v.reason == "stopped at the evaluation ceiling of 7");

  OracleOptions wide;
  wide.ceiling = 100;
  Verdict w = check_sat_bounded(phi, b, SemanticsProfile::Proposal, wide);
  CHECK(w.is_unsat());
  CHECK(w.evaluations == 14);  // seven models, two token values each
}

TEST_CASE("witnesses replay strictly and print deterministically") {
  Bounds b;
  SortEnv vars{{"s", Sort::seq(E())}};
  Term phi = parse_term(
      "(and (= (seq.get s 2) (as @e1 E)) (<= (seq.len s) 1))", vars);
  Verdict v1 = check_sat_bounded(phi, b, SemanticsProfile::Proposal);
  REQUIRE(v1.is_sat());
  const Model& m = *v1.model;
  // The empty sequence enumerates first; its out-of-bounds read is pinned
  // to the second element value, the first one that satisfies the formula.
  CHECK(m.base.at("s").equals(eseq({})));
  REQUIRE(m.tokens.size() == 1);
  CHECK(m.tokens.begin()->first.symbol == "seq.get");
  CHECK(m.tokens.begin()->second.equals(ev(1)));

  // Replay by hand with every token looked up instead of invented.
  StrictTokenSink strict(m.tokens);
  EvalConfig cfg{SemanticsProfile::Proposal, b, SliceConvention::Inclusive};
  ValueEnv env = m.base;
  CHECK(eval(phi, env, strict, cfg).as_bool());

  Verdict v2 = check_sat_bounded(phi, b, SemanticsProfile::Proposal);
  REQUIRE(v2.is_sat());
  CHECK(print_model(*v1.model) == print_model(*v2.model));
}

TEST_CASE("validity reports the earliest counterexample") {
  Bounds b;
  SortEnv vars{{"s", Sort::seq(E())}};
  ValidityResult ok = check_valid_bounded(
      parse_term("(= (seq.len (seq.rev s)) (seq.len s))", vars), b,
      SemanticsProfile::Proposal);
  CHECK(ok.valid);
  CHECK(ok.evaluations == 15);

  ValidityResult bad = check_valid_bounded(parse_term("(= (seq.len s) 0)", vars),
                                           b, SemanticsProfile::Proposal);
  CHECK(!bad.valid);
  REQUIRE(bad.counterexample.has_value());
  // The empty sequence satisfies the formula, so the first refuting model
  // is the next sequence in enumeration order.
  CHECK(bad.counterexample->base.at("s").equals(eseq({0})));
}

TEST_CASE("unit agrees with const of length one") {
  Bounds b;
  SortEnv vars{{"v", I()}};
  Term l = parse_term("(seq.unit v)", vars);
  Term r = parse_term("(seq.const 1 v)", vars);
  EquivResult res = check_equiv_bounded(l, r, b, SemanticsProfile::Proposal);
  CHECK(res.equivalent);
  CHECK(res.witnesses.empty());
  CHECK(res.evaluations == 14);  // seven window values, two sides each
}

TEST_CASE("both sides of an equivalence share one token assignment") {
  Bounds b;
  b.max_len = 2;
  SortEnv vars{{"s", Sort::seq(E())}};
  Term l = parse_term("(seq.get s 2)", vars);
  Term r = parse_term("(seq.get s 2)", vars);
  EquivResult res = check_equiv_bounded(l, r, b, SemanticsProfile::Proposal);
  CHECK(res.equivalent);
  // Every model reads out of bounds: 7 models, 2 token values, both sides.
  CHECK(res.evaluations == 28);
}

TEST_CASE("the at row of the reduction diverges exactly on delta collisions") {
  Bounds b;
  SortEnv vars{{"i", I()}, {"s", Sort::seq(I())}};
  Term orig = parse_term("(seq.at s i)", vars);
  Term red = reduce_to_arrayc(orig);

  EquivResult first = check_equiv_bounded(orig, red, b,
                                          SemanticsProfile::ArrayC);
  REQUIRE(!first.equivalent);
  REQUIRE(first.witnesses.size() == 1);
  const EquivWitness& w = first.witnesses[0];
  CHECK(w.model.base.at("i").as_int() == 0);
  CHECK(w.model.base.at("s").equals(iseq({0})));
  CHECK(w.left.equals(iseq({0})));
  CHECK(w.right.equals(iseq({})));

  OracleOptions opts;
  EquivResult all = check_equiv_bounded(orig, red, b,
                                        SemanticsProfile::ArrayC, opts, true);
  // A divergence needs an in-bounds read of the delta value 0: 57 models
  // at i=0, 56 at i=1, 49 at i=2.
  CHECK(all.witnesses.size() == 162);
  for (const auto& ww : all.witnesses) {
    long long i = ww.model.base.at("i").as_int();
    const auto& elems = ww.model.base.at("s").seq().elems;
    REQUIRE(i >= 0);
    REQUIRE(i < static_cast<long long>(elems.size()));
    CHECK(elems[static_cast<size_t>(i)].as_int() == 0);
    CHECK(ww.right.seq().elems.empty());
  }
}

TEST_CASE("equivalence rejects mismatched inputs") {
  Bounds b;
  SortEnv vars{{"i", I()}, {"p", B()}};
  Term l = parse_term("i", vars);
  Term r = parse_term("p", vars);
  CHECK_THROWS_AS(check_equiv_bounded(l, r, b, SemanticsProfile::Proposal),
                  SeqkitError);

  // One name used at two sorts across the sides.
  SortEnv as_int{{"x", I()}};
  SortEnv as_bool{{"x", B()}};
  Term lx = parse_term("(= x 0)", as_int);
  Term rx = parse_term("x", as_bool);
  CHECK_THROWS_AS(check_equiv_bounded(lx, rx, b, SemanticsProfile::Proposal),
                  SeqkitError);

  // Function-sorted terms have no comparison.
  SortEnv with_fn{{"f", Sort::fn({I()}, I())}};
  Term lf = parse_term("f", with_fn);
  CHECK_THROWS_AS(check_equiv_bounded(lf, lf, b, SemanticsProfile::Proposal),
                  SeqkitError);
}

TEST_CASE("profile diff is empty where the semantics agree") {
  Bounds b;
  b.max_len = 2;
  SortEnv vars{{"s", Sort::seq(E())}, {"t", Sort::seq(E())}};
  Term t = parse_term("(seq.concat s t)", vars);
  CHECK(diff_profiles(t, b, SemanticsProfile::Proposal,
                      SemanticsProfile::Cvc5)
            .empty());
  CHECK(diff_profiles(t, b, SemanticsProfile::Proposal,
                      SemanticsProfile::ArrayC)
            .empty());
}

TEST_CASE("profile diff pins get to out-of-bounds reads") {
  Bounds b;
  SortEnv vars{{"i", I()}, {"s", Sort::seq(I())}};
  Term t = parse_term("(seq.get s i)", vars);
  auto ws = diff_profiles(t, b, SemanticsProfile::Proposal,
                          SemanticsProfile::ArrayC);
  // 1666 of the 2800 models read out of bounds; each diverges for the six
  // token values that differ from delta.
  CHECK(ws.size() == 9996);
  for (const auto& w : ws) {
    long long i = w.model.base.at("i").as_int();
    const auto& elems = w.model.base.at("s").seq().elems;
    CHECK((i < 0 || i >= static_cast<long long>(elems.size())));
    CHECK(w.right.equals(iv(0)));
    CHECK(!w.left.equals(iv(0)));
    REQUIRE(w.model.tokens.size() == 1);
    CHECK(w.model.tokens.begin()->first.symbol == "seq.get");
  }
}

TEST_CASE("an exhausted ceiling surfaces as a resource error in diffs") {
  Bounds b;
  b.max_len = 2;
  SortEnv vars{{"s", Sort::seq(E())}};
  Term t = parse_term("(seq.get s 2)", vars);
  OracleOptions tight;
  tight.ceiling = 7;
  bool threw = false;
  try {
    diff_profiles(t, b, SemanticsProfile::Proposal, SemanticsProfile::Proposal,
                  tight);
  } catch (const SeqkitError& e) {
    threw = true;
    CHECK(e.kind() == ErrorKind::Resource);
    CHECK(std::string(e.what()).find("evaluation ceiling of 7") !=
          std::string::npos);
  }
  CHECK(threw);
}

TEST_CASE("fixed symbols are pinned, not enumerated") {
  Bounds b;
  ValueEnv fixed{{"s", eseq({0, 1})}};
  OracleOptions opts;
  opts.fixed_env = &fixed;
  SortEnv vars{{"s", Sort::seq(E())}};

  Verdict v = check_sat_bounded(parse_term("(= (seq.len s) 2)", vars), b,
                                SemanticsProfile::Proposal, opts);
  REQUIRE(v.is_sat());
  CHECK(v.model->base.empty());  // nothing was enumerated
  CHECK(v.evaluations == 1);

  Verdict no = check_sat_bounded(parse_term("(= (seq.len s) 3)", vars), b,
                                 SemanticsProfile::Proposal, opts);
  CHECK(no.is_unsat());
  CHECK(no.evaluations == 1);
}

TEST_CASE("preset tokens resolve ahead of enumeration") {
  Bounds b;
  TokenAssignment preset;
  TokenKey key{"seq.get", {eseq({}), iv(0)}};
  preset[key] = ev(1);
  OracleOptions opts;
  opts.preset_tokens = &preset;

  Term read = mk::get(mk::empty(E()), mk::int_lit(0));
  Verdict hit = check_sat_bounded(mk::eq(read, mk::elem_lit(E(), 1)), b,
                                  SemanticsProfile::Proposal, opts);
  REQUIRE(hit.is_sat());
  CHECK(hit.evaluations == 1);
  CHECK(hit.model->tokens.at(key).equals(ev(1)));

  // The pinned value removes the existential choice entirely.
  Verdict miss = check_sat_bounded(mk::eq(read, mk::elem_lit(E(), 0)), b,
                                   SemanticsProfile::Proposal, opts);
  CHECK(miss.is_unsat());
  CHECK(miss.evaluations == 1);
}

TEST_CASE("satisfiability within bounds is monotone in max_len") {
  SortEnv vars{{"s", Sort::seq(E())}};
  Term phi = parse_term("(and (= s (seq.rev s)) (= (seq.len s) 2))", vars);
  Bounds small;
  small.max_len = 2;
  Bounds big;
  big.max_len = 3;
  Verdict vs = check_sat_bounded(phi, small, SemanticsProfile::Proposal);
  Verdict vb = check_sat_bounded(phi, big, SemanticsProfile::Proposal);
  REQUIRE(vs.is_sat());
  REQUIRE(vb.is_sat());
  // Length-ordered enumeration makes the smaller universe a prefix of the
  // larger one, so the first witness survives the widening unchanged.
  CHECK(vs.model->base.at("s").equals(vb.model->base.at("s")));
  CHECK(vs.model->base.at("s").equals(eseq({0, 0})));
}

TEST_CASE("a planted model's diagram formula is found satisfiable") {
  Bounds b;
  SortEnv vars{{"i", I()}, {"s", Sort::seq(E())}};
  Term phi = parse_term(
      "(and (= s (seq.concat (seq.unit (as @e1 E)) (seq.unit (as @e0 E)))) "
      "(= i 3))",
      vars);
  Verdict v = check_sat_bounded(phi, b, SemanticsProfile::Proposal);
  REQUIRE(v.is_sat());
  CHECK(v.model->base.at("i").as_int() == 3);
  CHECK(v.model->base.at("s").equals(eseq({1, 0})));
  CHECK(v.model->tokens.empty());
}
