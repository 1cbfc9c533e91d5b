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

#include "knapwin/harness/ingest.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"
#include "knapwin/harness/costs.h"

namespace knapwin::harness {
namespace {

using nlohmann::json;

struct RawRecord {
  Payload payload;
  std::optional<std::vector<double>> costs;
  size_t line = 0;
};

[[noreturn]] void Fail(const std::string& source, size_t line,
                       const std::string& what) {
  throw std::runtime_error(source + ":" + std::to_string(line) + ": " + what);
}

class Dictionary {
 public:
  explicit Dictionary(const WordWeightTable* table) {
    if (table == nullptr) return;
    for (size_t i = 0; i < table->words().size(); ++i) {
      ids_.emplace(table->words()[i], static_cast<int32_t>(i));
    }
    next_ = static_cast<int32_t>(table->size());
  }

  int32_t Intern(const std::string& word) {
    auto [it, inserted] = ids_.emplace(word, next_);
    if (inserted) ++next_;
    return it->second;
  }

  size_t size() const { return static_cast<size_t>(next_); }

  // Word of every id; empty for ids without one.
  std::vector<std::string> Names() const {
    std::vector<std::string> names(size());
    for (const auto& [word, id] : ids_) names[static_cast<size_t>(id)] = word;
    return names;
  }

 private:
  std::unordered_map<std::string, int32_t> ids_;
  int32_t next_ = 0;
};

TokenBag ParseTokens(const json& payload, Dictionary& dict) {
  const json& tokens = payload.at("tokens");
  if (!tokens.is_object()) throw std::invalid_argument("'tokens' must be an object");
  std::map<int32_t, double> merged;
  for (auto it = tokens.begin(); it != tokens.end(); ++it) {
    const double count = it.value().get<double>();
    if (!(count > 0.0)) {
      throw std::invalid_argument("token '" + it.key() +
                                  "' has non-positive count");
    }
    merged[dict.Intern(it.key())] += count;
  }
  TokenBag bag;
  bag.counts.assign(merged.begin(), merged.end());
  if (payload.contains("followers")) {
    bag.followers = payload.at("followers").get<int64_t>();
    if (bag.followers < 0) throw std::invalid_argument("negative followers");
  }
  return bag;
}

Payload ParsePayload(const json& payload, UtilityKind utility, Dictionary& dict,
                     size_t& feature_dim) {
  if (!payload.is_object()) throw std::invalid_argument("'payload' must be an object");
  switch (utility) {
    case UtilityKind::kCoverage:
      return ParseTokens(payload, dict);
    case UtilityKind::kIvm: {
      FeatureVector fv{payload.at("features").get<std::vector<double>>()};
      if (fv.values.empty()) throw std::invalid_argument("empty feature vector");
      if (feature_dim == 0) feature_dim = fv.values.size();
      if (fv.values.size() != feature_dim) {
        throw std::invalid_argument("feature vector has " +
                                    std::to_string(fv.values.size()) +
                                    " entries, expected " +
                                    std::to_string(feature_dim));
      }
      return fv;
    }
    case UtilityKind::kBmc: {
      ItemSet set{payload.at("items").get<std::vector<int64_t>>()};
      std::sort(set.items.begin(), set.items.end());
      set.items.erase(std::unique(set.items.begin(), set.items.end()),
                      set.items.end());
      return set;
    }
    case UtilityKind::kModular: {
      ModularValue v{payload.at("value").get<double>()};
      if (v.value < 0.0) throw std::invalid_argument("negative value");
      return v;
    }
  }
  throw std::logic_error("unreachable");
}

Dataset Build(std::vector<RawRecord> records, const IngestOptions& options,
              const std::string& source,
              std::shared_ptr<const WordWeightTable> words, size_t feature_dim) {
  std::optional<CostModel> model;
  if (!options.cost_model.empty()) {
    model = CostModel::Parse(options.cost_model, options.d);
  }
  ContextAccumulator accumulator;
  for (const auto& r : records) accumulator.Add(r.payload);
  const CostContext context = accumulator.Finish();

  Dataset data;
  data.utility = options.utility;
  data.d = options.d;
  data.words = std::move(words);
  data.feature_dim = feature_dim;
  data.elements.reserve(records.size());
  Rng rng(options.seed);
  int64_t ordinal = 0;
  for (auto& r : records) {
    ++ordinal;
    std::vector<double> costs;
    try {
      if (r.costs) {
        if (r.costs->size() < static_cast<size_t>(options.d)) {
          Fail(source, r.line,
               "record has " + std::to_string(r.costs->size()) +
                   " costs, need " + std::to_string(options.d));
        }
        costs.assign(r.costs->begin(), r.costs->begin() + options.d);
      } else if (model) {
        costs = model->Assign(r.payload, context, rng);
      } else {
        Fail(source, r.line, "record has no costs and no cost scheme is set");
      }
      data.elements.push_back(
          MakeElement(ordinal, std::move(r.payload), std::move(costs)));
    } catch (const std::invalid_argument& e) {
      Fail(source, r.line, e.what());
    }
  }
  return data;
}

std::shared_ptr<const WordWeightTable> LoadTable(const IngestOptions& options) {
  if (options.utility != UtilityKind::kCoverage || options.vocabulary_path.empty()) {
    return nullptr;
  }
  return std::make_shared<const WordWeightTable>(
      WordWeightTable::LoadVocabularyFile(options.vocabulary_path));
}

std::shared_ptr<const WordWeightTable> FinishTable(
    std::shared_ptr<const WordWeightTable> table,
    const std::vector<RawRecord>& records, const Dictionary& dict,
    UtilityKind utility) {
  if (utility != UtilityKind::kCoverage || table) return table;
  std::vector<TokenBag> bags;
  bags.reserve(records.size());
  for (const auto& r : records) bags.push_back(std::get<TokenBag>(r.payload));
  return std::make_shared<const WordWeightTable>(
      WordWeightTable::FromCorpus(bags, dict.size(), dict.Names()));
}

}  // namespace

UtilityKind ParseUtility(const std::string& name) {
  if (name == "coverage") return UtilityKind::kCoverage;
  if (name == "ivm") return UtilityKind::kIvm;
  if (name == "bmc") return UtilityKind::kBmc;
  if (name == "modular") return UtilityKind::kModular;
  throw std::invalid_argument("unknown utility '" + name +
                              "' (expected coverage|ivm|bmc|modular)");
}

const char* UtilityName(UtilityKind kind) {
  switch (kind) {
    case UtilityKind::kCoverage: return "coverage";
    case UtilityKind::kIvm: return "ivm";
    case UtilityKind::kBmc: return "bmc";
    case UtilityKind::kModular: return "modular";
  }
  return "?";
}

Dataset ParseJsonl(std::istream& in, const IngestOptions& options,
                   const std::string& source) {
  auto table = LoadTable(options);
  Dictionary dict(table.get());
  size_t feature_dim = 0;
  std::vector<RawRecord> records;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (std::all_of(line.begin(), line.end(),
                    [](unsigned char c) { return std::isspace(c); })) {
      continue;
    }
    try {
      const json record = json::parse(line);
      RawRecord r;
      r.line = line_no;
      r.payload = ParsePayload(record.at("payload"), options.utility, dict,
                               feature_dim);
      if (record.contains("costs") && !record.at("costs").is_null()) {
        r.costs = record.at("costs").get<std::vector<double>>();
      }
      records.push_back(std::move(r));
    } catch (const json::exception& e) {
      Fail(source, line_no, std::string("malformed record: ") + e.what());
    } catch (const std::invalid_argument& e) {
      Fail(source, line_no, std::string("malformed record: ") + e.what());
    }
  }
  table = FinishTable(std::move(table), records, dict, options.utility);
  return Build(std::move(records), options, source, std::move(table),
               feature_dim);
}

Dataset ParseCsv(std::istream& in, const IngestOptions& options,
                 const std::string& source) {
  if (options.utility != UtilityKind::kIvm) {
    throw std::invalid_argument("CSV input carries feature vectors; use --utility ivm");
  }
  const bool costs_inline = options.cost_model.empty();
  const size_t cost_cols = costs_inline ? static_cast<size_t>(options.d) : 0;
  size_t feature_dim = 0;
  std::vector<RawRecord> records;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (std::isalpha(static_cast<unsigned char>(line[0]))) continue;  // header
    std::vector<double> values;
    std::istringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) {
      try {
        size_t used = 0;
        values.push_back(std::stod(cell, &used));
        while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        Fail(source, line_no, "malformed number '" + cell + "'");
      }
    }
    if (values.size() <= cost_cols) {
      Fail(source, line_no, "row has no feature columns");
    }
    RawRecord r;
    r.line = line_no;
    if (costs_inline) {
      r.costs = std::vector<double>(values.begin(), values.begin() + cost_cols);
    }
    FeatureVector fv{std::vector<double>(values.begin() + cost_cols, values.end())};
    if (feature_dim == 0) feature_dim = fv.values.size();
    if (fv.values.size() != feature_dim) {
      Fail(source, line_no, "row has " + std::to_string(fv.values.size()) +
                                " features, expected " + std::to_string(feature_dim));
    }
    r.payload = std::move(fv);
    records.push_back(std::move(r));
  }
  return Build(std::move(records), options, source, nullptr, feature_dim);
}

Dataset Ingest(const std::string& path, const IngestOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file " + path);
  std::string format = options.format;
  if (format.empty()) {
    format = path.size() >= 4 && path.substr(path.size() - 4) == ".csv" ? "csv" : "jsonl";
  }
  if (format == "jsonl") return ParseJsonl(in, options, path);
  if (format == "csv") return ParseCsv(in, options, path);
  throw std::invalid_argument("unknown input format '" + format +
                              "' (expected jsonl|csv)");
}

}  // namespace knapwin::harness
