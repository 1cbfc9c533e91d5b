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

#ifndef KNAPWIN_COVERAGE_H_
#define KNAPWIN_COVERAGE_H_

#include <map>
#include <memory>

#include "knapwin/core.h"
#include "knapwin/word_weights.h"

namespace knapwin {

// Weighted word coverage: f(S) = sum_w max_{v in S} n(v, w) * weight(w).
//
// Payload: TokenBag with at most one entry per word id. Words missing from
// the table weigh 0 (reported once per process).
class CoverageOracle : public UtilityOracle {
 public:
  explicit CoverageOracle(std::shared_ptr<const WordWeightTable> table);

  double Value() const override { return value_; }
  double Gain(const Element& element) const override;
  void Insert(const Element& element) override;
  std::unique_ptr<UtilityOracle> Clone() const override;
  void Reset() override;
  std::string Name() const override { return "coverage"; }

  // curmax(w); zero for uncovered words.
  double CurrentMax(int32_t word) const;
  const WordWeightTable& table() const { return *table_; }

 private:
  const TokenBag& Bag(const Element& element) const;

  std::shared_ptr<const WordWeightTable> table_;
  // Ordered so that Value() is summed in word-id order.
  std::map<int32_t, double> current_max_;
  double value_ = 0.0;
};

}  // namespace knapwin

#endif  // KNAPWIN_COVERAGE_H_
