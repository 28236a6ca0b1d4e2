// Copyright 2026 The proofmine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "proofmine/algorithms.hpp"
#include "proofmine/formula.hpp"
#include "proofmine/operator_checks.hpp"
#include "proofmine/real_codes.hpp"
#include "proofmine/syntax.hpp"
#include "proofmine/term.hpp"

using namespace proofmine;

static void BM_PairJ(benchmark::State& state) {
  for (auto _ : state) {
    std::uint64_t acc = 0;
    for (std::uint64_t n = 0; n <= 200; ++n)
      for (std::uint64_t m = 0; m <= 200; ++m) acc += PairJ(n, m);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_PairJ);

static void BM_CanonicalRep(benchmark::State& state) {
  const mpq_class r(7, 5);
  for (auto _ : state) benchmark::DoNotOptimize(CanonicalRepAt(r, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_CanonicalRep)->Arg(8)->Arg(16)->Arg(64);

// R 0 (lambda a n. S a) n, i.e. the identity on numerals by recursion.
static void BM_ReduceRecursor(benchmark::State& state) {
  const FinType zero = FinType::Zero();
  const Term step = Term::App(Term::Const(ConstKind::kPi, {FinType::Arrow(zero, zero), zero}),
                              Term::Const(ConstKind::kSucc));
  const Term t = Term::Apply(Term::Const(ConstKind::kRec, {zero}),
                             {Numeral(0), step, Numeral(static_cast<std::uint64_t>(state.range(0)))});
  for (auto _ : state) benchmark::DoNotOptimize(Reduce(t));
}
BENCHMARK(BM_ReduceRecursor)->Arg(10)->Arg(100);

static void BM_Dialectica(benchmark::State& state) {
  const Formula f = ParseFormula(
      "(forall x 0 (exists y 0 (or (forall z 0 (<= z y)) (not (exists w 0 (= (S w) x))))))");
  for (auto _ : state) benchmark::DoNotOptimize(Dialectica(NegativeTranslation(f)));
}
BENCHMARK(BM_Dialectica);

static void BM_ResolventProperties(benchmark::State& state) {
  const OperatorPtr a = MakeInstance("psd_skew", 1);
  VerifyOptions o;
  o.samples = 200;
  o.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(CheckResolventProperties(*a, o));
}
BENCHMARK(BM_ResolventProperties)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_ProximalPoint(benchmark::State& state) {
  const OperatorPtr a = MakeInstance("psd_skew", 1);
  const Vec x0 = Vec::Ones(a->dimension());
  const ParamSequence g = ParamSequence::Parse("const:1");
  for (auto _ : state) benchmark::DoNotOptimize(ProximalPoint(*a, x0, g, 200, Vec::Zero(a->dimension())));
}
BENCHMARK(BM_ProximalPoint);
BENCHMARK_MAIN();
