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

// The OpenMP path of every kernel must match its serial path exactly.

#include <gtest/gtest.h>

#include <vector>

#include "knapwin/baselines.h"
#include "knapwin/bmc.h"
#include "knapwin/cost_effect_greedy.h"
#include "knapwin/harness/costs.h"
#include "knapwin/knapstream.h"
#include "knapwin/knapwindow.h"
#include "knapwin/knapwindowplus.h"
#include "knapwin/parallel.h"
#include "acceptance/instances.h"
#include "test_util.h"

namespace knapwin {
namespace {

class ParallelTest : public ::testing::Test {
 protected:
  void SetUp() override { SetMaxThreads(4); }
};

acceptance::RandomStream Stream(acceptance::Family family, size_t n, int d,
                                uint64_t seed) {
  harness::Rng rng(seed);
  acceptance::StreamShape shape;
  shape.family = family;
  shape.n = n;
  shape.d = d;
  shape.cost_lo = 0.05;
  shape.cost_hi = 0.3;
  return acceptance::MakeRandomStream(shape, rng);
}

void ExpectSame(const SolutionSet& a, const SolutionSet& b) {
  EXPECT_EQ(a.Ordinals(), b.Ordinals());
  EXPECT_EQ(a.utility, b.utility);
}

TEST_F(ParallelTest, ParseParallelism) {
  EXPECT_EQ(ParseParallelism("omp"), Parallelism::kOpenMP);
  EXPECT_EQ(ParseParallelism("serial"), Parallelism::kSerial);
  EXPECT_THROW(ParseParallelism("gpu"), std::invalid_argument);
}

TEST_F(ParallelTest, ParallelForRethrows) {
  EXPECT_THROW(ParallelFor(64, Parallelism::kOpenMP,
                           [](size_t i) {
                             if (i == 17) throw std::runtime_error("boom");
                           }),
               std::runtime_error);
}

TEST_F(ParallelTest, KnapStream) {
  for (auto family : {acceptance::Family::kModular, acceptance::Family::kCoverage}) {
    auto s = Stream(family, 200, 2, 1);
    KnapStreamParams serial;
    serial.d = 2;
    auto parallel = serial;
    parallel.parallelism = Parallelism::kOpenMP;
    KsInstance a(1, serial, s.oracle), b(1, parallel, s.oracle);
    for (const auto& e : s.elements) {
      a.Process(e);
      b.Process(e);
    }
    ExpectSame(a.Solution(), b.Solution());
  }
}

TEST_F(ParallelTest, KnapWindow) {
  auto s = Stream(acceptance::Family::kCoverage, 150, 1, 2);
  KnapWindowParams p;
  p.window = 40;
  p.interval = 5;
  auto q = p;
  q.parallelism = Parallelism::kOpenMP;
  KnapWindow a(p, s.oracle), b(q, s.oracle);
  for (const auto& e : s.elements) {
    a.Process(e);
    b.Process(e);
    ExpectSame(a.Query(), b.Query());
  }
}

TEST_F(ParallelTest, KnapWindowPlus) {
  auto s = Stream(acceptance::Family::kCoverage, 300, 2, 3);
  KnapWindowPlusParams p;
  p.window = 60;
  p.d = 2;
  auto q = p;
  q.parallelism = Parallelism::kOpenMP;
  KnapWindowPlus a(p, s.oracle), b(q, s.oracle);
  const std::span<const ElementPtr> all(s.elements);
  for (size_t i = 0; i < all.size(); i += 3) {
    a.ProcessBatch(all.subspan(i, 3));
    b.ProcessBatch(all.subspan(i, 3));
    EXPECT_EQ(a.checkpoints(), b.checkpoints());
    ExpectSame(a.Query(), b.Query());
  }
}

TEST_F(ParallelTest, CegAndBruteForce) {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    auto big = Stream(acceptance::Family::kCoverage, 600, 1, 10 + seed);
    ExpectSame(Ceg(big.elements, KnapsackSpec(1), *big.oracle),
               Ceg(big.elements, KnapsackSpec(1), *big.oracle,
                   Parallelism::kOpenMP));
    auto small = Stream(acceptance::Family::kModular, 14, 2, 20 + seed);
    ExpectSame(BruteForceOpt(small.elements, KnapsackSpec(2), *small.oracle),
               BruteForceOpt(small.elements, KnapsackSpec(2), *small.oracle,
                             Parallelism::kOpenMP));
  }
}

// Lazy evaluation must pick exactly what the full rescan picks.
TEST_F(ParallelTest, LazyGreedyMatchesExhaustive) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const auto family = seed % 2 ? acceptance::Family::kCoverage
                                 : acceptance::Family::kModular;
    auto s = Stream(family, 80 + 40 * (seed % 3), 1 + seed % 2, 100 + seed);
    KnapsackSpec spec(1 + static_cast<int>(seed % 2));
    auto lazy_state = s.oracle->CloneEmpty();
    auto full_state = s.oracle->CloneEmpty();
    ExpectSame(CostEffectGreedy(SolutionSet(spec.d), *lazy_state, s.elements, spec),
               CostEffectGreedyExhaustive(SolutionSet(spec.d), *full_state,
                                          s.elements, spec));
  }
  harness::Rng rng(9);
  std::vector<ElementPtr> sets;
  for (int i = 1; i <= 300; ++i) {
    std::vector<int64_t> items;
    for (int k = 0; k < 6; ++k) items.push_back(static_cast<int64_t>(rng.Below(200)));
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    sets.push_back(testing::Items(i, items, {rng.Uniform(0.02, 0.2)}));
  }
  BmcOracle a, b;
  KnapsackSpec spec(1);
  const auto lazy = CostEffectGreedy(SolutionSet(1), a, sets, spec, Parallelism::kOpenMP);
  ExpectSame(lazy, CostEffectGreedyExhaustive(SolutionSet(1), b, sets, spec));
}

}  // namespace
}  // namespace knapwin
