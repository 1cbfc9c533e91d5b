// Copyright 2026 The Authors.
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

// Serial reference path vs OpenMP path for each parallel kernel.
// Arg 0 selects serial, 1 selects OpenMP.

#include <benchmark/benchmark.h>

#include "acceptance/instances.h"
#include "knapwin/baselines.h"
#include "knapwin/harness/generate.h"
#include "knapwin/ivm.h"
#include "knapwin/knapwindow.h"
#include "knapwin/knapwindowplus.h"
#include "knapwin/modular.h"

namespace {

using knapwin::Parallelism;

Parallelism Policy(const benchmark::State& state) {
  return state.range(0) == 0 ? Parallelism::kSerial : Parallelism::kOpenMP;
}

const knapwin::harness::Dataset& Stream() {
  static const auto data = knapwin::harness::Generate(
      knapwin::harness::GeneratorSpec::Parse("family=vectors,n=4000,dim=5,cost=iid:0.02:0.08"), 1);
  return data;
}

knapwin::OraclePtr Ivm() {
  static const knapwin::OraclePtr oracle = [] {
    knapwin::IvmParams p;
    p.dimension = 5;
    return std::make_shared<knapwin::IvmOracle>(p);
  }();
  return oracle;
}

void BM_KnapWindowFanOut(benchmark::State& state) {
  const auto& data = Stream();
  for (auto _ : state) {
    knapwin::KnapWindowParams p;
    p.window = 1000;
    p.interval = 50;
    p.parallelism = Policy(state);
    knapwin::KnapWindow kw(p, Ivm());
    kw.ProcessBatch(std::span(data.elements).first(2000));
    benchmark::DoNotOptimize(kw.Query());
  }
}
BENCHMARK(BM_KnapWindowFanOut)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_KnapWindowPlus(benchmark::State& state) {
  const auto& data = Stream();
  for (auto _ : state) {
    knapwin::KnapWindowPlusParams p;
    p.window = 1000;
    p.parallelism = Policy(state);
    knapwin::KnapWindowPlus kwp(p, Ivm());
    const std::span<const knapwin::ElementPtr> all(data.elements);
    for (size_t i = 0; i < 2000; i += 10) kwp.ProcessBatch(all.subspan(i, 10));
    benchmark::DoNotOptimize(kwp.Query());
  }
}
BENCHMARK(BM_KnapWindowPlus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CostEffectGreedy(benchmark::State& state) {
  const auto& data = Stream();
  const knapwin::KnapsackSpec spec(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(knapwin::Ceg(data.elements, spec, *Ivm(), Policy(state)));
  }
}
BENCHMARK(BM_CostEffectGreedy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
  knapwin::harness::Rng rng(3);
  knapwin::acceptance::StreamShape shape;
  shape.family = knapwin::acceptance::Family::kCoverage;
  shape.n = 18;
  shape.cost_lo = 0.1;
  shape.cost_hi = 0.3;
  const auto stream = knapwin::acceptance::MakeRandomStream(shape, rng);
  const knapwin::KnapsackSpec spec(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        knapwin::BruteForceOpt(stream.elements, spec, *stream.oracle, Policy(state)));
  }
}
BENCHMARK(BM_BruteForce)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
