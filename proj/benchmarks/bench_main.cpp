/*
 * Copyright 2026 The katd authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <benchmark/benchmark.h>

#include <vector>

#include "katd/laws/library.hpp"
#include "katd/laws/suite.hpp"
#include "katd/prng.hpp"
#include "katd/rel_model.hpp"
#include "katd/rewriting.hpp"
#include "katd/termination.hpp"

namespace {

using katd::FiniteRelation;
using katd::RelModel;

std::vector<FiniteRelation> random_relations(int n, int count) {
  RelModel m(n);
  katd::RandomStream rng(42);
  std::vector<FiniteRelation> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(m.random_element(rng));
  return out;
}

void BM_RelStar(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  RelModel m(n);
  auto rels = random_relations(n, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.star(rels[i]));
    i = (i + 1) % rels.size();
  }
}
BENCHMARK(BM_RelStar)->Arg(4)->Arg(6)->Arg(8);

void BM_RelOmega(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  RelModel m(n);
  auto rels = random_relations(n, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.omega(rels[i]));
    i = (i + 1) % rels.size();
  }
}
BENCHMARK(BM_RelOmega)->Arg(4)->Arg(6)->Arg(8);

void BM_Divergence(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  RelModel m(n);
  auto rels = random_relations(n, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(katd::divergence(m, rels[i]));
    i = (i + 1) % rels.size();
  }
}
BENCHMARK(BM_Divergence)->Arg(3)->Arg(6);

void BM_DivergenceOracle(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto rels = random_relations(n, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(katd::divergence_oracle(rels[i]));
    i = (i + 1) % rels.size();
  }
}
BENCHMARK(BM_DivergenceOracle)->Arg(3)->Arg(6);

void BM_Newman(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  RelModel m(n);
  auto rels = random_relations(n, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(katd::check_newman(m, rels[i], rels[(i + 7) % rels.size()]));
    i = (i + 1) % rels.size();
  }
}
BENCHMARK(BM_Newman)->Arg(3)->Arg(5);

void BM_UnionTheorem(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  RelModel m(n);
  auto rels = random_relations(n, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(katd::check_union_theorem(m, rels[i], rels[(i + 7) % rels.size()]));
    i = (i + 1) % rels.size();
  }
}
BENCHMARK(BM_UnionTheorem)->Arg(3)->Arg(5);

void BM_CheckLawExhaustive(benchmark::State& state) {
  RelModel m(2);
  const katd::Law* law = katd::find_law("diaind");
  for (auto _ : state) benchmark::DoNotOptimize(katd::check_law(m, *law, katd::Strategy::exhaustive()));
}
BENCHMARK(BM_CheckLawExhaustive);

void BM_CoreSuiteRel2(benchmark::State& state) {
  RelModel m(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(katd::run_suite(m, "core", {katd::Strategy::exhaustive(), {}}));
}
BENCHMARK(BM_CoreSuiteRel2);

}  // namespace

BENCHMARK_MAIN();
