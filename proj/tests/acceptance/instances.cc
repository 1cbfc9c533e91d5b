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

#include "acceptance/instances.h"

#include <algorithm>
#include <map>
#include <string>

#include "knapwin/coverage.h"
#include "knapwin/modular.h"
#include "knapwin/word_weights.h"

namespace knapwin::acceptance {

RandomStream MakeRandomStream(const StreamShape& shape, harness::Rng& rng) {
  RandomStream out;
  std::shared_ptr<const WordWeightTable> table;
  if (shape.family == Family::kCoverage) {
    std::vector<double> raw(shape.vocabulary);
    double total = 0.0;
    for (auto& r : raw) total += (r = 0.05 + rng.Uniform());
    std::vector<std::pair<std::string, double>> words;
    for (size_t i = 0; i < raw.size(); ++i) {
      words.emplace_back("w" + std::to_string(i), raw[i] / total);
    }
    table = std::make_shared<const WordWeightTable>(
        WordWeightTable::FromProbabilities(std::move(words)));
    out.oracle = std::make_shared<CoverageOracle>(table);
  } else {
    out.oracle = std::make_shared<ModularOracle>();
  }
  for (size_t i = 0; i < shape.n; ++i) {
    Payload payload;
    if (shape.family == Family::kCoverage) {
      std::map<int32_t, double> counts;
      const size_t k = 1 + rng.Below(shape.max_words);
      while (counts.size() < k) {
        counts[static_cast<int32_t>(rng.Below(shape.vocabulary))] =
            static_cast<double>(1 + rng.Below(3));
      }
      TokenBag bag;
      bag.counts.assign(counts.begin(), counts.end());
      payload = std::move(bag);
    } else {
      payload = ModularValue{rng.Uniform()};
    }
    std::vector<double> costs(static_cast<size_t>(shape.d));
    for (auto& c : costs) c = rng.Uniform(shape.cost_lo, shape.cost_hi);
    out.elements.push_back(
        MakeElement(static_cast<int64_t>(i + 1), std::move(payload), std::move(costs)));
  }
  return out;
}

double MaxCost(std::span<const ElementPtr> elements) {
  double m = 0.0;
  for (const auto& e : elements) m = std::max(m, e->max_cost());
  return m;
}

}  // namespace knapwin::acceptance
