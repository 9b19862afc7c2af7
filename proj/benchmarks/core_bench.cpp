#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "seqkit/axioms.hpp"
#include "seqkit/eval.hpp"
#include "seqkit/oracle.hpp"
#include "seqkit/parser.hpp"
#include "seqkit/printer.hpp"
#include "seqkit/reduction.hpp"

using namespace seqkit;

namespace {

SortEnv bench_vars() {
  Sort I = Sort::integer();
  Sort E = Sort::elem("E");
  SortEnv env;
  env.emplace("s", Sort::seq(I));
  env.emplace("t", Sort::seq(I));
  env.emplace("es", Sort::seq(E));
  env.emplace("i", I);
  env.emplace("j", I);
  env.emplace("g", Sort::fn({E}, E));
  return env;
}

const char* kMediumTerm =
    "(forall ((q Int)) (=> (and (<= 0 q) (< q (seq.len (seq.update s i t)))) "
    "(= (seq.get (seq.update s i t) q) (seq.get (seq.slice s 0 q) 0))))";

void BM_ParseTerm(benchmark::State& state) {
  const SortEnv vars = bench_vars();
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_term(kMediumTerm, vars));
  }
}
BENCHMARK(BM_ParseTerm);

void BM_PrintTerm(benchmark::State& state) {
  const SortEnv vars = bench_vars();
  Term t = parse_term(kMediumTerm, vars);
  for (auto _ : state) {
    benchmark::DoNotOptimize(print_term(t));
  }
}
BENCHMARK(BM_PrintTerm);

void BM_EvalUpdate(benchmark::State& state) {
  const SortEnv vars = bench_vars();
  Term t = parse_term("(seq.update s i t)", vars);
  EvalConfig cfg;
  Sort I = Sort::integer();
  std::vector<Value> elems;
  for (int k = 0; k < 3; ++k) elems.push_back(Value::integer(k));
  ValueEnv env{{"s", Value::seq(I, elems)},
               {"t", Value::seq(I, {Value::integer(7)})},
               {"i", Value::integer(1)}};
  TokenAssignment none;
  StrictTokenSink sink(none);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval(t, env, sink, cfg));
  }
}
BENCHMARK(BM_EvalUpdate);

void BM_EvalSliceForall(benchmark::State& state) {
  const SortEnv vars = bench_vars();
  Term t = parse_term(
      "(forall ((q Int)) (= (seq.slice s 0 q) (seq.slice s 0 q)))", vars);
  EvalConfig cfg;
  Sort I = Sort::integer();
  std::vector<Value> elems;
  for (int k = 0; k < 3; ++k) elems.push_back(Value::integer(k));
  ValueEnv env{{"s", Value::seq(I, elems)}};
  TokenAssignment none;
  StrictTokenSink sink(none);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval(t, env, sink, cfg));
  }
}
BENCHMARK(BM_EvalSliceForall);

void BM_CheckSatSmall(benchmark::State& state) {
  const SortEnv vars = bench_vars();
  Term phi = parse_term(
      "(and (= (seq.len es) 2) (= (seq.get es 0) (seq.get es 1)))", vars);
  Bounds b;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        check_sat_bounded(phi, b, SemanticsProfile::Proposal));
  }
}
BENCHMARK(BM_CheckSatSmall);

void BM_InstantiateSet(benchmark::State& state) {
  Bounds b;
  Sort E = Sort::elem("E");
  std::vector<Term> holes = default_holes(SchemaName::Set, 1, E);
  for (auto _ : state) {
    benchmark::DoNotOptimize(instantiate({SchemaName::Set, 1}, holes, b));
  }
}
BENCHMARK(BM_InstantiateSet);

void BM_ReduceToArrayC(benchmark::State& state) {
  const SortEnv vars = bench_vars();
  Term t = parse_term(
      "(seq.concat (seq.update s i t) (seq.slice s 0 j) (seq.set s j 5))",
      vars);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce_to_arrayc(t));
  }
}
BENCHMARK(BM_ReduceToArrayC);

}  // namespace

BENCHMARK_MAIN();
