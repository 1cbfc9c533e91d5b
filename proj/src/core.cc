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

#include "knapwin/core.h"

#include <algorithm>
#include <iostream>
#include <mutex>
#include <stdexcept>

namespace knapwin {

double TokenBag::Length() const {
  double total = 0.0;
  for (const auto& [word, count] : counts) total += count;
  return total;
}

Element::Element(int64_t ordinal, Payload payload, std::vector<double> costs)
    : ordinal_(ordinal), payload_(std::move(payload)), costs_(std::move(costs)) {
  if (ordinal_ < 1) {
    throw std::invalid_argument("element ordinal must be >= 1, got " +
                                std::to_string(ordinal_));
  }
  if (costs_.empty()) {
    throw std::invalid_argument("element " + std::to_string(ordinal_) +
                                " has no costs");
  }
  for (double c : costs_) {
    if (!(c > 0.0 && c <= 1.0)) {
      throw std::invalid_argument("element " + std::to_string(ordinal_) +
                                  " has cost " + std::to_string(c) +
                                  " outside (0, 1]");
    }
  }
  const auto [lo, hi] = std::minmax_element(costs_.begin(), costs_.end());
  min_cost_ = *lo;
  max_cost_ = *hi;
}

ElementPtr MakeElement(int64_t ordinal, Payload payload,
                       std::vector<double> costs) {
  return std::make_shared<const Element>(ordinal, std::move(payload),
                                         std::move(costs));
}

KnapsackSpec::KnapsackSpec(int dimension) : d(dimension) {
  if (d < 1) throw std::invalid_argument("knapsack dimension must be >= 1");
}

void ThrowDimensionMismatch(size_t totals, size_t costs, int d) {
  throw std::invalid_argument("dimension mismatch: totals=" + std::to_string(totals) +
                              " costs=" + std::to_string(costs) +
                              " d=" + std::to_string(d));
}

double CostEffectiveness(const Element& element, double gain) {
  return gain / element.max_cost();
}

void SolutionSet::Append(const ElementPtr& element, double new_utility) {
  const auto costs = element->costs();
  if (cost_totals.empty()) cost_totals.assign(costs.size(), 0.0);
  for (size_t j = 0; j < costs.size(); ++j) cost_totals[j] += costs[j];
  members.push_back(element);
  utility = new_utility;
}

bool SolutionSet::Contains(int64_t ordinal) const {
  return std::any_of(members.begin(), members.end(),
                     [&](const ElementPtr& e) { return e->ordinal() == ordinal; });
}

std::vector<int64_t> SolutionSet::Ordinals() const {
  std::vector<int64_t> out;
  out.reserve(members.size());
  for (const auto& e : members) out.push_back(e->ordinal());
  return out;
}

SolutionSet Singleton(const ElementPtr& element, double utility) {
  SolutionSet s(element->dimension());
  s.Append(element, utility);
  return s;
}

bool Prefer(const SolutionSet& a, const SolutionSet& b) {
  if (a.utility != b.utility) return a.utility > b.utility;
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    const int64_t oa = a.members[i]->ordinal();
    const int64_t ob = b.members[i]->ordinal();
    if (oa != ob) return oa < ob;
  }
  return false;
}

std::vector<double> RecomputeCostTotals(const SolutionSet& solution, int d) {
  std::vector<double> totals(static_cast<size_t>(d), 0.0);
  for (const auto& e : solution.members) {
    const auto costs = e->costs();
    for (int j = 0; j < d; ++j) totals[j] += costs[j];
  }
  return totals;
}

bool IsFeasible(const SolutionSet& solution, const KnapsackSpec& spec) {
  for (double total : RecomputeCostTotals(solution, spec.d)) {
    if (total > 1.0 + kFeasibilitySlack) return false;
  }
  return true;
}

double UtilityOracle::Evaluate(std::span<const ElementPtr> set) const {
  auto fresh = CloneEmpty();
  for (const auto& e : set) fresh->Insert(*e);
  return fresh->Value();
}

std::unique_ptr<UtilityOracle> UtilityOracle::CloneEmpty() const {
  auto fresh = Clone();
  fresh->Reset();
  return fresh;
}

void LogWarning(const std::string& message) {
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::cerr << "knapwin: warning: " << message << "\n";
}

}  // namespace knapwin
