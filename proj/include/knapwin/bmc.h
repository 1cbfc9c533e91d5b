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

#ifndef KNAPWIN_BMC_H_
#define KNAPWIN_BMC_H_

#include <memory>
#include <unordered_map>
#include <unordered_set>

#include "knapwin/core.h"

namespace knapwin {

using ItemWeights = std::unordered_map<int64_t, double>;

// Budgeted maximum coverage: f(S) = total weight of the items covered by
// the union of the members' item sets. Items weigh 1 unless `weights`
// says otherwise; weights must be non-negative.
class BmcOracle : public UtilityOracle {
 public:
  explicit BmcOracle(std::shared_ptr<const ItemWeights> weights = nullptr);

  double Value() const override { return value_; }
  double Gain(const Element& element) const override;
  void Insert(const Element& element) override;
  std::unique_ptr<UtilityOracle> Clone() const override;
  void Reset() override;
  std::string Name() const override { return "bmc"; }

  bool Covers(int64_t item) const { return covered_.count(item) != 0; }
  size_t covered_count() const { return covered_.size(); }

 private:
  const ItemSet& Items(const Element& element) const;
  double WeightOf(int64_t item) const;

  std::shared_ptr<const ItemWeights> weights_;
  std::unordered_set<int64_t> covered_;
  double value_ = 0.0;
};

}  // namespace knapwin

#endif  // KNAPWIN_BMC_H_
