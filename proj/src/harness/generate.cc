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

#include "knapwin/harness/generate.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "knapwin/harness/costs.h"

namespace knapwin::harness {
namespace {

// Seed offsets so payloads and costs draw from independent streams.
constexpr uint64_t kCostStream = 0x636f737473ULL;

size_t ParseCount(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size() || v < 0) throw std::invalid_argument(value);
    return static_cast<size_t>(v);
  } catch (const std::exception&) {
    throw std::invalid_argument("generator key '" + key +
                                "' needs a non-negative integer, got '" +
                                value + "'");
  }
}

double ParseReal(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("generator key '" + key +
                                "' needs a number, got '" + value + "'");
  }
}

// Inverse-CDF sampler over ranks 0..n-1 with P(r) proportional to
// (r + 1)^-s.
class Zipf {
 public:
  Zipf(size_t n, double s) : cdf_(n) {
    double total = 0.0;
    for (size_t r = 0; r < n; ++r) {
      total += std::pow(static_cast<double>(r + 1), -s);
      cdf_[r] = total;
    }
    for (auto& c : cdf_) c /= total;
  }

  size_t Sample(Rng& rng) const {
    const double u = rng.Uniform();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return std::min(static_cast<size_t>(it - cdf_.begin()), cdf_.size() - 1);
  }

 private:
  std::vector<double> cdf_;
};

// Uniform in [1, 2 * mean - 1], so the mean is `mean`.
size_t DrawLength(size_t mean, Rng& rng) {
  return 1 + static_cast<size_t>(rng.Below(2 * mean - 1));
}

}  // namespace

GeneratorSpec GeneratorSpec::Parse(const std::string& text) {
  // Commas inside a cost scheme's parentheses belong to the previous pair.
  std::vector<std::string> pairs;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    if (piece.find('=') == std::string::npos && !pairs.empty()) {
      pairs.back() += "," + piece;
    } else if (!piece.empty()) {
      pairs.push_back(piece);
    }
  }
  GeneratorSpec spec;
  for (const auto& pair : pairs) {
    const auto eq = pair.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("generator spec entry '" + pair +
                                  "' is not key=value");
    }
    const std::string key = pair.substr(0, eq);
    const std::string value = pair.substr(eq + 1);
    if (key == "family") {
      if (value == "tokens") spec.family = Family::kTokens;
      else if (value == "vectors") spec.family = Family::kVectors;
      else if (value == "items") spec.family = Family::kItems;
      else if (value == "modular") spec.family = Family::kModular;
      else throw std::invalid_argument("unknown family '" + value +
                                       "' (expected tokens|vectors|items|modular)");
    } else if (key == "n") {
      spec.n = ParseCount(key, value);
    } else if (key == "d") {
      spec.d = static_cast<int>(ParseCount(key, value));
    } else if (key == "cost") {
      spec.cost = value;
    } else if (key == "dim") {
      spec.dim = ParseCount(key, value);
    } else if (key == "vocab") {
      spec.vocab = ParseCount(key, value);
    } else if (key == "zipf") {
      spec.zipf = ParseReal(key, value);
    } else if (key == "length") {
      spec.length = ParseCount(key, value);
    } else if (key == "universe") {
      spec.universe = ParseCount(key, value);
    } else {
      throw std::invalid_argument("unknown generator key '" + key + "'");
    }
  }
  if (spec.d < 1) throw std::invalid_argument("generator needs d >= 1");
  if (spec.dim == 0 || spec.vocab == 0 || spec.length == 0 || spec.universe == 0) {
    throw std::invalid_argument("generator sizes dim, vocab, length, universe must be positive");
  }
  CostModel::Parse(spec.cost, spec.d);
  return spec;
}

UtilityKind GeneratorSpec::utility() const {
  switch (family) {
    case Family::kTokens: return UtilityKind::kCoverage;
    case Family::kVectors: return UtilityKind::kIvm;
    case Family::kItems: return UtilityKind::kBmc;
    case Family::kModular: return UtilityKind::kModular;
  }
  return UtilityKind::kModular;
}

Dataset Generate(const GeneratorSpec& spec, uint64_t seed) {
  Rng rng(seed);
  std::vector<Payload> payloads;
  payloads.reserve(spec.n);
  std::optional<Zipf> zipf;
  if (spec.family == Family::kTokens) zipf.emplace(spec.vocab, spec.zipf);
  for (size_t i = 0; i < spec.n; ++i) {
    switch (spec.family) {
      case Family::kTokens: {
        std::map<int32_t, double> counts;
        const size_t len = DrawLength(spec.length, rng);
        for (size_t k = 0; k < len; ++k) {
          counts[static_cast<int32_t>(zipf->Sample(rng))] += 1.0;
        }
        TokenBag bag;
        bag.counts.assign(counts.begin(), counts.end());
        // Log-uniform follower counts in [0, 1e5).
        bag.followers = static_cast<int64_t>(std::exp(rng.Uniform() * std::log(1e5))) - 1;
        payloads.emplace_back(std::move(bag));
        break;
      }
      case Family::kVectors: {
        FeatureVector fv;
        fv.values.resize(spec.dim);
        for (auto& x : fv.values) x = rng.Uniform();
        payloads.emplace_back(std::move(fv));
        break;
      }
      case Family::kItems: {
        ItemSet set;
        const size_t len = DrawLength(spec.length, rng);
        for (size_t k = 0; k < len; ++k) {
          set.items.push_back(static_cast<int64_t>(rng.Below(spec.universe)));
        }
        std::sort(set.items.begin(), set.items.end());
        set.items.erase(std::unique(set.items.begin(), set.items.end()), set.items.end());
        payloads.emplace_back(std::move(set));
        break;
      }
      case Family::kModular:
        payloads.emplace_back(ModularValue{rng.Uniform()});
        break;
    }
  }

  Dataset data;
  data.utility = spec.utility();
  data.d = spec.d;
  if (spec.family == Family::kVectors) data.feature_dim = spec.dim;
  if (spec.family == Family::kTokens) {
    std::vector<TokenBag> bags;
    bags.reserve(payloads.size());
    for (const auto& p : payloads) bags.push_back(std::get<TokenBag>(p));
    std::vector<std::string> names(spec.vocab);
    for (size_t i = 0; i < names.size(); ++i) names[i] = "w" + std::to_string(i);
    data.words = std::make_shared<const WordWeightTable>(
        WordWeightTable::FromCorpus(bags, spec.vocab, std::move(names)));
  }

  ContextAccumulator accumulator;
  for (const auto& p : payloads) accumulator.Add(p);
  const CostContext context = accumulator.Finish();
  const CostModel model = CostModel::Parse(spec.cost, spec.d);
  Rng cost_rng(seed ^ kCostStream);
  data.elements.reserve(payloads.size());
  for (size_t i = 0; i < payloads.size(); ++i) {
    auto costs = model.Assign(payloads[i], context, cost_rng);
    data.elements.push_back(MakeElement(static_cast<int64_t>(i + 1),
                                        std::move(payloads[i]), std::move(costs)));
  }
  return data;
}

void WriteJsonl(const Dataset& data, std::ostream& out) {
  using nlohmann::json;
  const auto* names = data.words && !data.words->words().empty()
                          ? &data.words->words()
                          : nullptr;
  for (const auto& e : data.elements) {
    json payload = json::object();
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, TokenBag>) {
            json tokens = json::object();
            for (const auto& [id, n] : p.counts) {
              const bool named = names != nullptr && static_cast<size_t>(id) < names->size();
              tokens[named ? (*names)[id] : "w" + std::to_string(id)] = n;
            }
            payload["tokens"] = std::move(tokens);
            payload["followers"] = p.followers;
          } else if constexpr (std::is_same_v<T, FeatureVector>) {
            payload["features"] = p.values;
          } else if constexpr (std::is_same_v<T, ItemSet>) {
            payload["items"] = p.items;
          } else if constexpr (std::is_same_v<T, ModularValue>) {
            payload["value"] = p.value;
          }
        },
        e->payload());
    json record;
    record["payload"] = std::move(payload);
    record["costs"] = std::vector<double>(e->costs().begin(), e->costs().end());
    out << record.dump() << '\n';
  }
}

}  // namespace knapwin::harness
