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

// Seeded synthetic streams standing in for the tweet and visit logs.

#ifndef KNAPWIN_HARNESS_GENERATE_H_
#define KNAPWIN_HARNESS_GENERATE_H_

#include <cstdint>
#include <ostream>
#include <string>

#include "knapwin/harness/ingest.h"

namespace knapwin::harness {

enum class Family { kTokens, kVectors, kItems, kModular };

// Text form: comma-separated key=value pairs, e.g.
//   family=vectors,n=1000,dim=5,cost=iid:0.02:0.08
// Keys (defaults in parentheses):
//   family   tokens | vectors | items | modular (modular)
//   n        stream length (1000)
//   d        knapsacks (1)
//   cost     CostModel text (iid:0.02:0.08)
//   dim      feature dimension for vectors (5)
//   vocab    vocabulary size for tokens (2000)
//   zipf     Zipf exponent of word frequencies (1.1)
//   length   mean tokens per bag, or mean items per set (10)
//   universe item universe for items (1000)
struct GeneratorSpec {
  Family family = Family::kModular;
  size_t n = 1000;
  int d = 1;
  std::string cost = "iid:0.02:0.08";
  size_t dim = 5;
  size_t vocab = 2000;
  double zipf = 1.1;
  size_t length = 10;
  size_t universe = 1000;

  static GeneratorSpec Parse(const std::string& text);
  UtilityKind utility() const;
};

// Same (spec, seed) -> same stream. Token words are named "w<id>".
Dataset Generate(const GeneratorSpec& spec, uint64_t seed);

// Writes the ingestion JSONL format; ParseJsonl reads it back.
void WriteJsonl(const Dataset& data, std::ostream& out);

}  // namespace knapwin::harness

#endif  // KNAPWIN_HARNESS_GENERATE_H_
