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

#ifndef KNAPWIN_COST_EFFECT_GREEDY_H_
#define KNAPWIN_COST_EFFECT_GREEDY_H_

#include <span>

#include "knapwin/core.h"
#include "knapwin/parallel.h"

namespace knapwin {

// Grows `solution` by repeatedly adding the feasible pool element with the
// largest Delta f(v | S) / delta(v), recomputed against the growing S, until
// no pool element fits. Ties go to the smaller ordinal. `state` must hold
// exactly the members of `solution` and is advanced with it. Pool elements
// already in the solution are ignored.
//
// Uses lazy (CELF) evaluation. The OpenMP policy computes the first round
// of gains in parallel and returns the same solution as the serial policy.
SolutionSet CostEffectGreedy(SolutionSet solution, UtilityOracle& state,
                             std::span<const ElementPtr> pool,
                             const KnapsackSpec& spec,
                             Parallelism parallelism = Parallelism::kSerial);

// Reference version that rescans every live element each round. Agrees
// with CostEffectGreedy whenever the oracle's gains are exactly
// non-increasing as S grows.
SolutionSet CostEffectGreedyExhaustive(SolutionSet solution, UtilityOracle& state,
                                       std::span<const ElementPtr> pool,
                                       const KnapsackSpec& spec);

}  // namespace knapwin

#endif  // KNAPWIN_COST_EFFECT_GREEDY_H_
