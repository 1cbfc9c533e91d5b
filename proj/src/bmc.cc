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

#include "knapwin/bmc.h"

#include <stdexcept>

namespace knapwin {

BmcOracle::BmcOracle(std::shared_ptr<const ItemWeights> weights)
    : weights_(std::move(weights)) {
  if (weights_) {
    for (const auto& [item, w] : *weights_) {
      if (w < 0.0) {
        throw std::invalid_argument("bmc: item " + std::to_string(item) +
                                    " has negative weight");
      }
    }
  }
}

const ItemSet& BmcOracle::Items(const Element& element) const {
  const auto* items = std::get_if<ItemSet>(&element.payload());
  if (items == nullptr) {
    throw std::invalid_argument("bmc oracle: element " +
                                std::to_string(element.ordinal()) +
                                " has no item set");
  }
  return *items;
}

double BmcOracle::WeightOf(int64_t item) const {
  if (!weights_) return 1.0;
  auto it = weights_->find(item);
  return it == weights_->end() ? 1.0 : it->second;
}

// Item sets carry distinct ids (ingestion deduplicates them).
double BmcOracle::Gain(const Element& element) const {
  double gain = 0.0;
  for (int64_t item : Items(element).items) {
    if (!Covers(item)) gain += WeightOf(item);
  }
  return gain;
}

void BmcOracle::Insert(const Element& element) {
  for (int64_t item : Items(element).items) {
    if (covered_.insert(item).second) value_ += WeightOf(item);
  }
}

std::unique_ptr<UtilityOracle> BmcOracle::Clone() const {
  return std::make_unique<BmcOracle>(*this);
}

void BmcOracle::Reset() {
  covered_.clear();
  value_ = 0.0;
}

}  // namespace knapwin
