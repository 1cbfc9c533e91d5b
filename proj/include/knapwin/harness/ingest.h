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

// Stream ingestion from JSONL and CSV files.
//
// JSONL, one element per line:
//   {"payload": {"tokens": {"word": 2, ...}, "followers": 17}, "costs": [...]}
//   {"payload": {"features": [0.1, 0.7, ...]}}
//   {"payload": {"items": [3, 9, 12]}}
//   {"payload": {"value": 0.42}}
// `costs` may be omitted when a cost model is configured; when present it
// needs at least d entries and the first d are used.
//
// CSV (feature vectors): without a cost model the first d columns are
// costs and the rest are features; with one, every column is a feature.

#ifndef KNAPWIN_HARNESS_INGEST_H_
#define KNAPWIN_HARNESS_INGEST_H_

#include <istream>
#include <memory>
#include <string>
#include <vector>

#include "knapwin/core.h"
#include "knapwin/word_weights.h"

namespace knapwin::harness {

enum class UtilityKind { kCoverage, kIvm, kBmc, kModular };

UtilityKind ParseUtility(const std::string& name);
const char* UtilityName(UtilityKind kind);

// An ordered, fully materialized stream with ordinals 1..n.
struct Dataset {
  UtilityKind utility = UtilityKind::kModular;
  int d = 1;
  std::vector<ElementPtr> elements;
  // Word weights for coverage streams.
  std::shared_ptr<const WordWeightTable> words;
  size_t feature_dim = 0;
};

struct IngestOptions {
  UtilityKind utility = UtilityKind::kModular;
  int d = 1;
  // CostModel text; empty means every record must carry costs.
  std::string cost_model;
  uint64_t seed = 0;
  // "jsonl" or "csv"; empty picks by file extension (default jsonl).
  std::string format;
  // Optional word<TAB>p(w) file; otherwise weights come from the corpus.
  std::string vocabulary_path;
};

// Throws std::runtime_error with `path:line:` context on malformed records
// or costs outside (0, 1].
Dataset Ingest(const std::string& path, const IngestOptions& options);
Dataset ParseJsonl(std::istream& in, const IngestOptions& options,
                   const std::string& source = "<stream>");
Dataset ParseCsv(std::istream& in, const IngestOptions& options,
                 const std::string& source = "<stream>");

}  // namespace knapwin::harness

#endif  // KNAPWIN_HARNESS_INGEST_H_
