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

#include "knapwin/word_weights.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace knapwin {

double WordWeightTable::EntropyWeight(double p) { return p * std::log(1.0 / p); }

WordWeightTable WordWeightTable::FromProbabilities(
    std::vector<std::pair<std::string, double>> words) {
  WordWeightTable table;
  table.probabilities_.reserve(words.size());
  table.weights_.reserve(words.size());
  for (auto& [word, p] : words) {
    if (!(p > 0.0 && p <= 1.0)) {
      throw std::invalid_argument("word '" + word + "' has probability " +
                                  std::to_string(p) + " outside (0, 1]");
    }
    const auto id = static_cast<int32_t>(table.words_.size());
    if (!word.empty() && !table.ids_.emplace(word, id).second) {
      throw std::invalid_argument("duplicate word '" + word + "'");
    }
    table.probabilities_.push_back(p);
    table.weights_.push_back(EntropyWeight(p));
    table.words_.push_back(std::move(word));
  }
  return table;
}

WordWeightTable WordWeightTable::FromCorpus(std::span<const TokenBag> corpus,
                                            size_t vocabulary_size,
                                            std::vector<std::string> names) {
  if (!names.empty() && names.size() != vocabulary_size) {
    throw std::invalid_argument("corpus vocabulary has " +
                                std::to_string(vocabulary_size) + " ids but " +
                                std::to_string(names.size()) + " names");
  }
  std::vector<double> counts(vocabulary_size, 0.0);
  double total = 0.0;
  for (const auto& bag : corpus) {
    for (const auto& [id, n] : bag.counts) {
      if (id < 0 || static_cast<size_t>(id) >= vocabulary_size) {
        throw std::invalid_argument("word id " + std::to_string(id) +
                                    " outside vocabulary of size " +
                                    std::to_string(vocabulary_size));
      }
      counts[id] += n;
      total += n;
    }
  }
  WordWeightTable table;
  table.probabilities_.resize(vocabulary_size, 0.0);
  table.weights_.resize(vocabulary_size, 0.0);
  if (total > 0.0) {
    for (size_t i = 0; i < vocabulary_size; ++i) {
      if (counts[i] <= 0.0) continue;
      const double p = counts[i] / total;
      table.probabilities_[i] = p;
      table.weights_[i] = EntropyWeight(p);
    }
  }
  for (size_t i = 0; i < names.size(); ++i) {
    if (!names[i].empty()) table.ids_.emplace(names[i], static_cast<int32_t>(i));
  }
  table.words_ = std::move(names);
  return table;
}

WordWeightTable WordWeightTable::LoadVocabularyFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open vocabulary file " + path);
  std::vector<std::pair<std::string, double>> words;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": expected word<TAB>p(w)");
    }
    std::string word = line.substr(0, tab);
    try {
      size_t used = 0;
      const std::string p_text = line.substr(tab + 1);
      const double p = std::stod(p_text, &used);
      if (used != p_text.size()) throw std::invalid_argument("trailing data");
      words.emplace_back(std::move(word), p);
    } catch (const std::exception&) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": malformed probability");
    }
  }
  try {
    return FromProbabilities(std::move(words));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

double WordWeightTable::Probability(int32_t id) const {
  return Contains(id) ? probabilities_[id] : 0.0;
}

int32_t WordWeightTable::Id(std::string_view word) const {
  auto it = ids_.find(std::string(word));
  return it == ids_.end() ? -1 : it->second;
}

}  // namespace knapwin
