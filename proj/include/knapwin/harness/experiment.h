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

// Sliding-window experiment driver: replays a stream in slides of T
// elements, queries one algorithm after every slide and writes one CSV row
// per slide.

#ifndef KNAPWIN_HARNESS_EXPERIMENT_H_
#define KNAPWIN_HARNESS_EXPERIMENT_H_

#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "knapwin/core.h"
#include "knapwin/harness/ingest.h"
#include "knapwin/parallel.h"

namespace knapwin::harness {

enum class Algorithm { kKs, kKw, kKwPlus, kCeg, kBrute };

Algorithm ParseAlgorithm(const std::string& name);
const char* AlgorithmName(Algorithm algorithm);

// max(1, ceil(0.0001 W)).
size_t DefaultSlide(size_t window);

struct ExperimentConfig {
  Algorithm algorithm = Algorithm::kKwPlus;
  UtilityKind utility = UtilityKind::kModular;
  size_t window = 1000;
  // 0 selects DefaultSlide(window).
  size_t slide = 0;
  double lambda = 0.1;
  double beta = 0.1;
  double alpha = 0.5;
  size_t eta = 20;
  int d = 1;
  // CostModel text; empty means costs come from the input records.
  std::string cost;
  // Exactly one of `input` and `generator` is set.
  std::string input;
  std::string format;
  std::string generator;
  std::string vocabulary;
  // Metrics CSV; empty or "-" writes to stdout.
  std::string output;
  uint64_t seed = 0;
  // KnapWindow checkpoint interval; 0 selects ceil(sqrt(W T)).
  size_t interval = 0;
  double sigma = 1.0;
  double bandwidth = 0.75;
  Parallelism parallelism = Parallelism::kSerial;

  size_t EffectiveSlide() const { return slide == 0 ? DefaultSlide(window) : slide; }
  // Throws std::invalid_argument with an actionable message.
  void Validate() const;
};

struct SlideMetrics {
  int64_t t = 0;
  Algorithm algorithm = Algorithm::kKs;
  double utility = 0.0;
  size_t size = 0;
  int64_t micros = 0;
  // Unrounded wall time of the slide, for averaging.
  int64_t nanos = 0;
  size_t checkpoints = 0;
  size_t stored_elements = 0;
  // Not written to the CSV; kept for invariant checks.
  std::vector<int64_t> members;
  double cost_max = 0.0;
};

// Common face of the five algorithms. ks, ceg and brute keep the active
// window and recompute from scratch on every query.
class SlidingAlgorithm {
 public:
  virtual ~SlidingAlgorithm() = default;
  virtual void Slide(std::span<const ElementPtr> batch) = 0;
  virtual SolutionSet Query() const = 0;
  virtual size_t Checkpoints() const = 0;
  virtual size_t StoredElements() const = 0;
};

std::unique_ptr<UtilityOracle> MakeOracle(const Dataset& data,
                                          const ExperimentConfig& config);
std::unique_ptr<SlidingAlgorithm> MakeAlgorithm(const ExperimentConfig& config,
                                                OraclePtr prototype);

// Loads the configured input or generator.
Dataset LoadDataset(const ExperimentConfig& config);

std::vector<SlideMetrics> Replay(const Dataset& data,
                                 const ExperimentConfig& config);

// Header, one row per slide, then a `summary` row holding the mean utility,
// mean size, mean micros, max checkpoints and max stored elements. An empty
// run writes the header only.
void WriteMetricsCsv(std::span<const SlideMetrics> rows, std::ostream& out);

// LoadDataset + Replay + WriteMetricsCsv to config.output.
std::vector<SlideMetrics> RunExperiment(const ExperimentConfig& config);

}  // namespace knapwin::harness

#endif  // KNAPWIN_HARNESS_EXPERIMENT_H_
