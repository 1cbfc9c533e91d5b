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

#ifndef KNAPWIN_WORD_WEIGHTS_H_
#define KNAPWIN_WORD_WEIGHTS_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "knapwin/core.h"

namespace knapwin {

// Entropy weight p(w) * log(1 / p(w)) of every word, indexed by word id.
// Immutable after construction and safe to share across threads.
class WordWeightTable {
 public:
  WordWeightTable() = default;

  // Word i gets id i. Throws std::invalid_argument if some p is outside
  // (0, 1].
  static WordWeightTable FromProbabilities(
      std::vector<std::pair<std::string, double>> words);

  // p(w) = total count of w over the corpus / total count of all words.
  // Ids are taken from the bags; `vocabulary_size` must exceed every id.
  // `names`, if given, holds one word per id.
  static WordWeightTable FromCorpus(std::span<const TokenBag> corpus,
                                    size_t vocabulary_size,
                                    std::vector<std::string> names = {});

  // One `word<TAB>p(w)` per line. Throws std::runtime_error on I/O or
  // parse errors (with the line number).
  static WordWeightTable LoadVocabularyFile(const std::string& path);

  static double EntropyWeight(double p);

  size_t size() const { return weights_.size(); }
  // Zero for ids outside the table.
  double Weight(int32_t id) const {
    return id >= 0 && static_cast<size_t>(id) < weights_.size() ? weights_[id]
                                                                : 0.0;
  }
  bool Contains(int32_t id) const {
    return id >= 0 && static_cast<size_t>(id) < weights_.size();
  }
  double Probability(int32_t id) const;
  // -1 when the word is unknown or the table has no names.
  int32_t Id(std::string_view word) const;
  const std::vector<std::string>& words() const { return words_; }

 private:
  std::vector<double> probabilities_;
  std::vector<double> weights_;
  std::vector<std::string> words_;
  std::unordered_map<std::string, int32_t> ids_;
};

}  // namespace knapwin

#endif  // KNAPWIN_WORD_WEIGHTS_H_
