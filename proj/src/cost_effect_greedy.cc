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

#include "knapwin/cost_effect_greedy.h"

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace knapwin {
namespace {

// Pool minus duplicates and current members, in ordinal order.
std::vector<ElementPtr> Candidates(const SolutionSet& solution,
                                   std::span<const ElementPtr> pool) {
  std::vector<int64_t> taken = solution.Ordinals();
  std::sort(taken.begin(), taken.end());
  std::vector<ElementPtr> remaining(pool.begin(), pool.end());
  std::sort(remaining.begin(), remaining.end(),
            [](const ElementPtr& a, const ElementPtr& b) {
              return a->ordinal() < b->ordinal();
            });
  remaining.erase(std::unique(remaining.begin(), remaining.end(),
                              [](const ElementPtr& a, const ElementPtr& b) {
                                return a->ordinal() == b->ordinal();
                              }),
                  remaining.end());
  std::erase_if(remaining, [&](const ElementPtr& e) {
    return std::binary_search(taken.begin(), taken.end(), e->ordinal());
  });
  return remaining;
}

void PrepareTotals(SolutionSet& solution, const KnapsackSpec& spec) {
  if (solution.cost_totals.empty()) {
    solution.cost_totals.assign(static_cast<size_t>(spec.d), 0.0);
  }
}

// (ce, ordinal) ordered so that the preferred pick is the largest.
struct Key {
  double ce;
  int64_t ordinal;
  size_t index;
  // Round in which `ce` was computed.
  size_t round;
};

bool Worse(const Key& a, const Key& b) {
  if (a.ce != b.ce) return a.ce < b.ce;
  return a.ordinal > b.ordinal;
}

struct WorseCmp {
  bool operator()(const Key& a, const Key& b) const { return Worse(a, b); }
};

// Small pools do not amortize a parallel region.
constexpr size_t kParallelPool = 256;

}  // namespace

SolutionSet CostEffectGreedy(SolutionSet solution, UtilityOracle& state,
                             std::span<const ElementPtr> pool,
                             const KnapsackSpec& spec, Parallelism parallelism) {
  PrepareTotals(solution, spec);
  const std::vector<ElementPtr> remaining = Candidates(solution, pool);
  const size_t n = remaining.size();
  constexpr double kDead = -std::numeric_limits<double>::infinity();
  std::vector<double> initial(n, kDead);
  const Parallelism policy = n >= kParallelPool ? parallelism : Parallelism::kSerial;
  ParallelFor(n, policy, [&](size_t i) {
    const Element& e = *remaining[i];
    if (CheckFeasibility(solution.cost_totals, e, spec)) {
      initial[i] = CostEffectiveness(e, state.Gain(e));
    }
  });
  std::vector<Key> keys;
  keys.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    if (initial[i] != kDead) keys.push_back({initial[i], remaining[i]->ordinal(), i, 0});
  }
  std::priority_queue<Key, std::vector<Key>, WorseCmp> heap(WorseCmp{}, std::move(keys));

  // Lazy evaluation: by submodularity a gain computed in an earlier round
  // bounds the current one, so a refreshed top that still beats the next
  // bound is the exact argmax, tie-break included. Totals only grow, so an
  // element that stops fitting never fits again.
  size_t round = 0;
  while (!heap.empty()) {
    Key top = heap.top();
    heap.pop();
    const Element& e = *remaining[top.index];
    if (!CheckFeasibility(solution.cost_totals, e, spec)) continue;
    if (top.round != round) {
      top.ce = CostEffectiveness(e, state.Gain(e));
      top.round = round;
      if (!heap.empty() && Worse(top, heap.top())) {
        heap.push(top);
        continue;
      }
    }
    state.Insert(e);
    solution.Append(remaining[top.index], state.Value());
    ++round;
  }
  return solution;
}

SolutionSet CostEffectGreedyExhaustive(SolutionSet solution, UtilityOracle& state,
                                       std::span<const ElementPtr> pool,
                                       const KnapsackSpec& spec) {
  PrepareTotals(solution, spec);
  const std::vector<ElementPtr> remaining = Candidates(solution, pool);
  std::vector<char> alive(remaining.size(), 1);
  while (true) {
    bool found = false;
    Key best{0.0, 0, 0, 0};
    for (size_t i = 0; i < remaining.size(); ++i) {
      if (!alive[i]) continue;
      const Element& e = *remaining[i];
      if (!CheckFeasibility(solution.cost_totals, e, spec)) {
        alive[i] = 0;
        continue;
      }
      const Key k{CostEffectiveness(e, state.Gain(e)), e.ordinal(), i, 0};
      if (!found || Worse(best, k)) {
        best = k;
        found = true;
      }
    }
    if (!found) break;
    state.Insert(*remaining[best.index]);
    solution.Append(remaining[best.index], state.Value());
    alive[best.index] = 0;
  }
  return solution;
}

}  // namespace knapwin
