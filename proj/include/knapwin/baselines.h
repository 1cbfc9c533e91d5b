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

// Reference solvers and guarantee calculators: the cost-effective greedy
// batch baseline, exact enumeration for small windows, and the
// approximation ratios the streaming algorithms must meet.

#ifndef KNAPWIN_BASELINES_H_
#define KNAPWIN_BASELINES_H_

#include <span>

#include "knapwin/core.h"
#include "knapwin/parallel.h"

namespace knapwin {

// Largest window BruteForceOpt will enumerate.
inline constexpr size_t kBruteForceCap = 25;

struct ApproxBound {
  double lambda;
  double beta;
  int d;
  // Largest single cost observed.
  double delta;
  // min(delta + lambda, 0.5 + lambda)
  double epsilon;
  // epsilon + beta
  double epsilon_prime;
  // (1 - epsilon) / (1 + d): KnapStream and KnapWindow.
  double ks_bound;
  // (1 - epsilon') / (2 (1 + d)): KnapWindowPlus.
  double kwp_bound;

  static ApproxBound Compute(double lambda, double beta, int d, double delta);
};

// Cost-effective greedy over the whole window from the empty set.
SolutionSet Ceg(std::span<const ElementPtr> window, const KnapsackSpec& spec,
                const UtilityOracle& prototype,
                Parallelism parallelism = Parallelism::kSerial);

// Exact argmax of f over feasible subsets of `window` (ties as in Prefer).
// Throws std::invalid_argument above kBruteForceCap elements. The OpenMP
// policy splits the enumeration by smallest member and returns the same
// set as the serial policy.
SolutionSet BruteForceOpt(std::span<const ElementPtr> window,
                          const KnapsackSpec& spec,
                          const UtilityOracle& prototype,
                          Parallelism parallelism = Parallelism::kSerial);

}  // namespace knapwin

#endif  // KNAPWIN_BASELINES_H_
