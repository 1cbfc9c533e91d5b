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

#include "knapwin/baselines.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "knapwin/cost_effect_greedy.h"

namespace knapwin {

ApproxBound ApproxBound::Compute(double lambda, double beta, int d,
                                 double delta) {
  ApproxBound b{};
  b.lambda = lambda;
  b.beta = beta;
  b.d = d;
  b.delta = delta;
  b.epsilon = std::min(delta + lambda, 0.5 + lambda);
  b.epsilon_prime = b.epsilon + beta;
  b.ks_bound = (1.0 - b.epsilon) / (1.0 + d);
  b.kwp_bound = (1.0 - b.epsilon_prime) / (2.0 * (1.0 + d));
  return b;
}

SolutionSet Ceg(std::span<const ElementPtr> window, const KnapsackSpec& spec,
                const UtilityOracle& prototype, Parallelism parallelism) {
  auto state = prototype.CloneEmpty();
  return CostEffectGreedy(SolutionSet(spec.d), *state, window, spec,
                          parallelism);
}

namespace {

// Depth-first enumeration of every feasible subset whose members all have
// index >= `next`, extending `current`.
class Enumerator {
 public:
  Enumerator(std::span<const ElementPtr> window, const KnapsackSpec& spec)
      : window_(window), spec_(spec) {}

  void Visit(size_t next, const SolutionSet& current,
             const UtilityOracle& state, SolutionSet& best) const {
    if (Prefer(current, best)) best = current;
    for (size_t j = next; j < window_.size(); ++j) {
      Extend(j, current, state, best);
    }
  }

  void Extend(size_t j, const SolutionSet& current, const UtilityOracle& state,
              SolutionSet& best) const {
    const ElementPtr& e = window_[j];
    if (!CheckFeasibility(current.cost_totals, *e, spec_)) return;
    auto child_state = state.Clone();
    child_state->Insert(*e);
    SolutionSet child = current;
    child.Append(e, child_state->Value());
    Visit(j + 1, child, *child_state, best);
  }

 private:
  std::span<const ElementPtr> window_;
  const KnapsackSpec& spec_;
};

}  // namespace

SolutionSet BruteForceOpt(std::span<const ElementPtr> window,
                          const KnapsackSpec& spec,
                          const UtilityOracle& prototype,
                          Parallelism parallelism) {
  if (window.size() > kBruteForceCap) {
    throw std::invalid_argument(
        "brute-force enumeration refuses a window of " +
        std::to_string(window.size()) + " elements (cap is " +
        std::to_string(kBruteForceCap) + ")");
  }
  const auto root_state = prototype.CloneEmpty();
  const SolutionSet empty(spec.d);
  const Enumerator enumerator(window, spec);
  SolutionSet best(spec.d);
  if (parallelism == Parallelism::kSerial) {
    enumerator.Visit(0, empty, *root_state, best);
    return best;
  }
  // Branch j holds the subsets whose smallest index is j.
  std::vector<SolutionSet> branch_best(window.size(), SolutionSet(spec.d));
  ParallelFor(window.size(), parallelism, [&](size_t j) {
    enumerator.Extend(j, empty, *root_state, branch_best[j]);
  });
  for (const auto& b : branch_best) {
    if (Prefer(b, best)) best = b;
  }
  return best;
}

}  // namespace knapwin
