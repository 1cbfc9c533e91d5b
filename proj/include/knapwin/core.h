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

// Domain model shared by every algorithm: stream elements, the d-knapsack
// constraint, solution sets and the utility-oracle contract.

#ifndef KNAPWIN_CORE_H_
#define KNAPWIN_CORE_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace knapwin {

// Absolute slack used by every feasibility test. Budgets are 1 and costs are
// at least 1e-2 in practice, so the slack only absorbs float accumulation.
inline constexpr double kFeasibilitySlack = 1e-12;

// Word-frequency bag. Word ids index a WordWeightTable.
struct TokenBag {
  std::vector<std::pair<int32_t, double>> counts;
  // Follower count of the posting user; only read by the influence cost
  // scheme.
  int64_t followers = 0;

  double Length() const;
};

struct FeatureVector {
  std::vector<double> values;
};

struct ItemSet {
  std::vector<int64_t> items;
};

// Payload of the modular (additive) utility.
struct ModularValue {
  double value = 0.0;
};

using Payload =
    std::variant<std::monostate, TokenBag, FeatureVector, ItemSet, ModularValue>;

// One stream item. Immutable once built; algorithms share it through
// ElementPtr.
class Element {
 public:
  // Throws std::invalid_argument if `ordinal` < 1, `costs` is empty, or any
  // cost lies outside (0, 1].
  Element(int64_t ordinal, Payload payload, std::vector<double> costs);

  int64_t ordinal() const { return ordinal_; }
  const Payload& payload() const { return payload_; }
  std::span<const double> costs() const { return costs_; }
  int dimension() const { return static_cast<int>(costs_.size()); }

  // gamma_t: minimum cost across knapsacks.
  double min_cost() const { return min_cost_; }
  // delta_t: maximum cost across knapsacks.
  double max_cost() const { return max_cost_; }

 private:
  int64_t ordinal_;
  Payload payload_;
  std::vector<double> costs_;
  double min_cost_ = 0.0;
  double max_cost_ = 0.0;
};

using ElementPtr = std::shared_ptr<const Element>;

ElementPtr MakeElement(int64_t ordinal, Payload payload,
                       std::vector<double> costs);

// d knapsacks, each with budget 1 after normalization.
struct KnapsackSpec {
  int d = 1;

  explicit KnapsackSpec(int dimension = 1);
};

// True iff adding `element` to a set with per-knapsack cost `totals` keeps
// every knapsack within budget. Throws std::invalid_argument when the
// dimensions of `totals`, the element and `spec` disagree.
[[noreturn]] void ThrowDimensionMismatch(size_t totals, size_t costs, int d);

inline bool CheckFeasibility(std::span<const double> totals,
                             const Element& element, const KnapsackSpec& spec) {
  const auto costs = element.costs();
  const auto d = static_cast<size_t>(spec.d);
  if (totals.size() != d || costs.size() != d) {
    ThrowDimensionMismatch(totals.size(), costs.size(), spec.d);
  }
  for (size_t j = 0; j < d; ++j) {
    if (totals[j] + costs[j] > 1.0 + kFeasibilitySlack) return false;
  }
  return true;
}

// Marginal gain per unit of the element's largest cost.
double CostEffectiveness(const Element& element, double gain);

// A solution in insertion order with its cached cost totals and utility.
struct SolutionSet {
  std::vector<ElementPtr> members;
  std::vector<double> cost_totals;
  double utility = 0.0;

  SolutionSet() = default;
  explicit SolutionSet(int d) : cost_totals(static_cast<size_t>(d), 0.0) {}

  size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }

  // Appends `element`, adds its costs and stores `new_utility` as f(S).
  void Append(const ElementPtr& element, double new_utility);
  bool Contains(int64_t ordinal) const;
  std::vector<int64_t> Ordinals() const;
};

SolutionSet Singleton(const ElementPtr& element, double utility);

// Strict preference used for every argmax over solutions: higher utility,
// then fewer members, then lexicographically smaller member ordinals.
bool Prefer(const SolutionSet& a, const SolutionSet& b);

// Recomputes each knapsack's total from the members.
std::vector<double> RecomputeCostTotals(const SolutionSet& solution, int d);

bool IsFeasible(const SolutionSet& solution, const KnapsackSpec& spec);

// Incremental state of a monotone submodular utility f over an implicit set
// S of inserted elements.
//
// Const methods must be safe to call concurrently on the same object. A
// clone shares no mutable state with its source and may move to another
// thread.
class UtilityOracle {
 public:
  virtual ~UtilityOracle() = default;

  // f(S) for the current state.
  virtual double Value() const = 0;
  // Delta f(v | S). Does not modify the state.
  virtual double Gain(const Element& element) const = 0;
  // S <- S + {v}. Must not throw for an element whose Gain() succeeded.
  virtual void Insert(const Element& element) = 0;
  virtual std::unique_ptr<UtilityOracle> Clone() const = 0;
  // S <- {}.
  virtual void Reset() = 0;
  virtual std::string Name() const = 0;

  // f(set) from an empty copy of this oracle; the state is untouched.
  double Evaluate(std::span<const ElementPtr> set) const;
  // Empty copy of this oracle.
  std::unique_ptr<UtilityOracle> CloneEmpty() const;
};

using OraclePtr = std::shared_ptr<const UtilityOracle>;

void LogWarning(const std::string& message);

}  // namespace knapwin

#endif  // KNAPWIN_CORE_H_
