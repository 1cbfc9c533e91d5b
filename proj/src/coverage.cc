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

#include "knapwin/coverage.h"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace knapwin {
namespace {

std::atomic<bool> unknown_word_reported{false};

void ReportUnknownWord(int32_t id) {
  if (!unknown_word_reported.exchange(true)) {
    LogWarning("word id " + std::to_string(id) +
               " is not in the weight table; treating its weight as 0");
  }
}

}  // namespace

CoverageOracle::CoverageOracle(std::shared_ptr<const WordWeightTable> table)
    : table_(std::move(table)) {
  if (!table_) throw std::invalid_argument("coverage oracle needs a table");
}

const TokenBag& CoverageOracle::Bag(const Element& element) const {
  const auto* bag = std::get_if<TokenBag>(&element.payload());
  if (bag == nullptr) {
    throw std::invalid_argument("coverage oracle: element " +
                                std::to_string(element.ordinal()) +
                                " has no token bag");
  }
  return *bag;
}

double CoverageOracle::Gain(const Element& element) const {
  double gain = 0.0;
  for (const auto& [word, count] : Bag(element).counts) {
    if (!table_->Contains(word)) {
      ReportUnknownWord(word);
      continue;
    }
    const double excess = count - CurrentMax(word);
    if (excess > 0.0) gain += excess * table_->Weight(word);
  }
  return gain;
}

void CoverageOracle::Insert(const Element& element) {
  for (const auto& [word, count] : Bag(element).counts) {
    if (!table_->Contains(word)) {
      ReportUnknownWord(word);
      continue;
    }
    double& slot = current_max_[word];
    slot = std::max(slot, count);
  }
  value_ = 0.0;
  for (const auto& [word, count] : current_max_) {
    value_ += count * table_->Weight(word);
  }
}

std::unique_ptr<UtilityOracle> CoverageOracle::Clone() const {
  return std::make_unique<CoverageOracle>(*this);
}

void CoverageOracle::Reset() {
  current_max_.clear();
  value_ = 0.0;
}

double CoverageOracle::CurrentMax(int32_t word) const {
  auto it = current_max_.find(word);
  return it == current_max_.end() ? 0.0 : it->second;
}

}  // namespace knapwin
