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

#include "knapwin/harness/experiment.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "knapwin/baselines.h"
#include "knapwin/bmc.h"
#include "knapwin/coverage.h"
#include "knapwin/harness/generate.h"
#include "knapwin/ivm.h"
#include "knapwin/knapstream.h"
#include "knapwin/knapwindow.h"
#include "knapwin/knapwindowplus.h"
#include "knapwin/modular.h"

namespace knapwin::harness {
namespace {

// Keeps the W most recent elements for the recompute-from-scratch
// algorithms.
class StoredWindow : public SlidingAlgorithm {
 public:
  StoredWindow(const ExperimentConfig& config, OraclePtr prototype)
      : config_(config), spec_(config.d), prototype_(std::move(prototype)) {}

  void Slide(std::span<const ElementPtr> batch) override {
    for (const auto& e : batch) {
      window_.push_back(e);
      if (window_.size() > config_.window) window_.pop_front();
    }
  }

  size_t StoredElements() const override { return window_.size(); }

 protected:
  std::vector<ElementPtr> Window() const { return {window_.begin(), window_.end()}; }

  ExperimentConfig config_;
  KnapsackSpec spec_;
  OraclePtr prototype_;
  std::deque<ElementPtr> window_;
};

class KsFromScratch : public StoredWindow {
 public:
  using StoredWindow::StoredWindow;

  SolutionSet Query() const override {
    KnapStreamParams params;
    params.lambda = config_.lambda;
    params.d = config_.d;
    params.parallelism = config_.parallelism;
    const int64_t start = window_.empty() ? 1 : window_.front()->ordinal();
    KsInstance ks(start, params, prototype_);
    for (const auto& e : window_) ks.Process(e);
    return ks.Solution();
  }

  size_t Checkpoints() const override { return 1; }
};

class CegFromScratch : public StoredWindow {
 public:
  using StoredWindow::StoredWindow;
  SolutionSet Query() const override {
    return Ceg(Window(), spec_, *prototype_, config_.parallelism);
  }
  size_t Checkpoints() const override { return 0; }
};

class BruteFromScratch : public StoredWindow {
 public:
  using StoredWindow::StoredWindow;
  SolutionSet Query() const override {
    return BruteForceOpt(Window(), spec_, *prototype_, config_.parallelism);
  }
  size_t Checkpoints() const override { return 0; }
};

class KwAdapter : public SlidingAlgorithm {
 public:
  KwAdapter(const ExperimentConfig& config, OraclePtr prototype)
      : kw_(Params(config), std::move(prototype)) {}
  void Slide(std::span<const ElementPtr> batch) override { kw_.ProcessBatch(batch); }
  SolutionSet Query() const override { return kw_.Query(); }
  size_t Checkpoints() const override { return kw_.num_checkpoints(); }
  size_t StoredElements() const override { return kw_.StoredElements(); }

 private:
  static KnapWindowParams Params(const ExperimentConfig& config) {
    KnapWindowParams p;
    p.window = config.window;
    p.interval = config.interval == 0
                     ? DefaultInterval(config.window, config.EffectiveSlide())
                     : config.interval;
    p.interval = std::min(p.interval, config.window);
    p.lambda = config.lambda;
    p.d = config.d;
    p.parallelism = config.parallelism;
    return p;
  }
  KnapWindow kw_;
};

class KwPlusAdapter : public SlidingAlgorithm {
 public:
  KwPlusAdapter(const ExperimentConfig& config, OraclePtr prototype)
      : kwp_(Params(config), std::move(prototype)) {}
  void Slide(std::span<const ElementPtr> batch) override { kwp_.ProcessBatch(batch); }
  SolutionSet Query() const override { return kwp_.Query(); }
  size_t Checkpoints() const override { return kwp_.num_checkpoints(); }
  size_t StoredElements() const override { return kwp_.StoredElements(); }

 private:
  static KnapWindowPlusParams Params(const ExperimentConfig& config) {
    KnapWindowPlusParams p;
    p.window = config.window;
    p.lambda = config.lambda;
    p.beta = config.beta;
    p.buffer = {config.alpha, config.eta};
    p.d = config.d;
    p.parallelism = config.parallelism;
    return p;
  }
  KnapWindowPlus kwp_;
};

void CheckOpenRate(const char* name, double v) {
  if (!(v > 0.0 && v < 1.0)) {
    throw std::invalid_argument(std::string("--") + name + " must lie in (0, 1), got " +
                                std::to_string(v));
  }
}

std::string FormatReal(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

Algorithm ParseAlgorithm(const std::string& name) {
  if (name == "ks") return Algorithm::kKs;
  if (name == "kw") return Algorithm::kKw;
  if (name == "kwplus" || name == "kw+") return Algorithm::kKwPlus;
  if (name == "ceg") return Algorithm::kCeg;
  if (name == "brute") return Algorithm::kBrute;
  throw std::invalid_argument("unknown algorithm '" + name +
                              "' (expected ks|kw|kwplus|ceg|brute)");
}

const char* AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kKs: return "ks";
    case Algorithm::kKw: return "kw";
    case Algorithm::kKwPlus: return "kwplus";
    case Algorithm::kCeg: return "ceg";
    case Algorithm::kBrute: return "brute";
  }
  return "?";
}

size_t DefaultSlide(size_t window) {
  return std::max<size_t>(1, static_cast<size_t>(std::ceil(0.0001 * static_cast<double>(window))));
}

void ExperimentConfig::Validate() const {
  if (window == 0) throw std::invalid_argument("--window must be positive");
  if (EffectiveSlide() > window) {
    throw std::invalid_argument("--slide (" + std::to_string(EffectiveSlide()) +
                                ") must not exceed --window (" +
                                std::to_string(window) + ")");
  }
  CheckOpenRate("lambda", lambda);
  CheckOpenRate("beta", beta);
  CheckOpenRate("alpha", alpha);
  if (eta == 0) throw std::invalid_argument("--eta must be positive");
  if (d < 1) throw std::invalid_argument("--d must be at least 1");
  if (interval > window) {
    throw std::invalid_argument("--interval must not exceed --window");
  }
  if (!(sigma > 0.0) || !(bandwidth > 0.0)) {
    throw std::invalid_argument("--sigma and --bandwidth must be positive");
  }
  if (algorithm == Algorithm::kBrute && window > kBruteForceCap) {
    throw std::invalid_argument(
        "brute enumerates every subset of the window and is capped at W <= " +
        std::to_string(kBruteForceCap) + " (got W=" + std::to_string(window) +
        "); lower --window or use --algo ceg");
  }
}

std::unique_ptr<UtilityOracle> MakeOracle(const Dataset& data,
                                          const ExperimentConfig& config) {
  switch (data.utility) {
    case UtilityKind::kCoverage:
      return std::make_unique<CoverageOracle>(
          data.words ? data.words : std::make_shared<const WordWeightTable>());
    case UtilityKind::kIvm: {
      IvmParams p;
      p.sigma = config.sigma;
      p.bandwidth = config.bandwidth;
      p.dimension = data.feature_dim;
      return std::make_unique<IvmOracle>(p);
    }
    case UtilityKind::kBmc:
      return std::make_unique<BmcOracle>();
    case UtilityKind::kModular:
      return std::make_unique<ModularOracle>();
  }
  throw std::logic_error("unreachable");
}

std::unique_ptr<SlidingAlgorithm> MakeAlgorithm(const ExperimentConfig& config,
                                                OraclePtr prototype) {
  switch (config.algorithm) {
    case Algorithm::kKs: return std::make_unique<KsFromScratch>(config, std::move(prototype));
    case Algorithm::kKw: return std::make_unique<KwAdapter>(config, std::move(prototype));
    case Algorithm::kKwPlus: return std::make_unique<KwPlusAdapter>(config, std::move(prototype));
    case Algorithm::kCeg: return std::make_unique<CegFromScratch>(config, std::move(prototype));
    case Algorithm::kBrute: return std::make_unique<BruteFromScratch>(config, std::move(prototype));
  }
  throw std::logic_error("unreachable");
}

Dataset LoadDataset(const ExperimentConfig& config) {
  if (config.input.empty() == config.generator.empty()) {
    throw std::invalid_argument("give exactly one of --input and --gen");
  }
  if (!config.generator.empty()) {
    GeneratorSpec spec = GeneratorSpec::Parse(config.generator);
    if (config.generator.find("d=") == std::string::npos) spec.d = config.d;
    if (!config.cost.empty()) spec.cost = config.cost;
    if (spec.d != config.d) {
      throw std::invalid_argument("generator d=" + std::to_string(spec.d) +
                                  " disagrees with --d " + std::to_string(config.d));
    }
    if (spec.utility() != config.utility) {
      throw std::invalid_argument(std::string("generator family yields utility ") +
                                  UtilityName(spec.utility()) + ", not " +
                                  UtilityName(config.utility));
    }
    return Generate(spec, config.seed);
  }
  IngestOptions options;
  options.utility = config.utility;
  options.d = config.d;
  options.cost_model = config.cost;
  options.seed = config.seed;
  options.format = config.format;
  options.vocabulary_path = config.vocabulary;
  return Ingest(config.input, options);
}

std::vector<SlideMetrics> Replay(const Dataset& data,
                                 const ExperimentConfig& config) {
  config.Validate();
  const OraclePtr prototype = MakeOracle(data, config);
  auto algorithm = MakeAlgorithm(config, prototype);
  const size_t slide = config.EffectiveSlide();
  const std::span<const ElementPtr> stream(data.elements);
  std::vector<SlideMetrics> rows;
  rows.reserve(stream.size() / slide + 1);
  for (size_t begin = 0; begin < stream.size(); begin += slide) {
    const auto batch = stream.subspan(begin, std::min(slide, stream.size() - begin));
    const auto t0 = std::chrono::steady_clock::now();
    algorithm->Slide(batch);
    const SolutionSet solution = algorithm->Query();
    const auto t1 = std::chrono::steady_clock::now();
    SlideMetrics row;
    row.t = batch.back()->ordinal();
    row.algorithm = config.algorithm;
    row.utility = solution.utility;
    row.size = solution.size();
    row.nanos = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
    row.micros = row.nanos / 1000;
    row.checkpoints = algorithm->Checkpoints();
    row.stored_elements = algorithm->StoredElements();
    row.members = solution.Ordinals();
    for (double c : solution.cost_totals) row.cost_max = std::max(row.cost_max, c);
    rows.push_back(std::move(row));
  }
  return rows;
}

void WriteMetricsCsv(std::span<const SlideMetrics> rows, std::ostream& out) {
  out << "t,algo,utility,size,micros,checkpoints,stored_elements\n";
  if (rows.empty()) return;
  double utility = 0.0, size = 0.0, micros = 0.0;
  size_t checkpoints = 0, stored = 0;
  for (const auto& r : rows) {
    out << r.t << ',' << AlgorithmName(r.algorithm) << ',' << FormatReal(r.utility)
        << ',' << r.size << ',' << r.micros << ',' << r.checkpoints << ','
        << r.stored_elements << '\n';
    utility += r.utility;
    size += static_cast<double>(r.size);
    micros += static_cast<double>(r.micros);
    checkpoints = std::max(checkpoints, r.checkpoints);
    stored = std::max(stored, r.stored_elements);
  }
  const double n = static_cast<double>(rows.size());
  out << "summary," << AlgorithmName(rows.front().algorithm) << ','
      << FormatReal(utility / n) << ',' << FormatReal(size / n) << ','
      << FormatReal(micros / n) << ',' << checkpoints << ',' << stored << '\n';
}

std::vector<SlideMetrics> RunExperiment(const ExperimentConfig& config) {
  config.Validate();
  const Dataset data = LoadDataset(config);
  auto rows = Replay(data, config);
  if (config.output.empty() || config.output == "-") {
    WriteMetricsCsv(rows, std::cout);
  } else {
    std::ofstream out(config.output);
    if (!out) throw std::runtime_error("cannot write metrics file " + config.output);
    WriteMetricsCsv(rows, out);
    if (!out) throw std::runtime_error("failed writing metrics file " + config.output);
  }
  return rows;
}

}  // namespace knapwin::harness
