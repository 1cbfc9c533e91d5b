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

// knapwin: run sliding-window experiments, generate synthetic streams and
// run the acceptance checks.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "acceptance/acceptance_suite.h"
#include "knapwin/harness/experiment.h"
#include "knapwin/harness/generate.h"
#include "knapwin/parallel.h"

namespace {

using knapwin::harness::ExperimentConfig;

int Run(const ExperimentConfig& config) {
  knapwin::harness::RunExperiment(config);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submodular maximization over sliding windows under d-knapsack constraints"};
  app.require_subcommand(1);

  ExperimentConfig config;
  std::string algo = "kwplus";
  std::string utility = "modular";
  std::string parallelism = "serial";
  int threads = 0;
  auto* run = app.add_subcommand("run", "Replay a stream and write per-slide metrics CSV");
  run->add_option("--algo", algo, "ks | kw | kwplus | ceg | brute")->capture_default_str();
  run->add_option("--utility", utility, "coverage | ivm | bmc | modular")->capture_default_str();
  run->add_option("--window", config.window, "Window size W")->capture_default_str();
  run->add_option("--slide", config.slide, "Elements per slide T (default max(1, ceil(0.0001 W)))");
  run->add_option("--lambda", config.lambda, "OPT grid ratio")->capture_default_str();
  run->add_option("--beta", config.beta, "Checkpoint pruning factor (kwplus)")->capture_default_str();
  run->add_option("--alpha", config.alpha, "Buffer admission factor (kwplus)")->capture_default_str();
  run->add_option("--eta", config.eta, "Buffer capacity (kwplus)")->capture_default_str();
  run->add_option("--d", config.d, "Number of knapsacks")->capture_default_str();
  run->add_option("--cost", config.cost, "Cost scheme, e.g. iid:0.02:0.08 or uniform_k:10+length:10");
  auto* input = run->add_option("--input", config.input, "JSONL or CSV stream");
  auto* gen = run->add_option("--gen", config.generator, "Generator spec, e.g. family=vectors,n=1000,dim=5");
  input->excludes(gen);
  run->add_option("--format", config.format, "jsonl | csv (default by extension)");
  run->add_option("--vocab", config.vocabulary, "word<TAB>p(w) file for coverage");
  run->add_option("--seed", config.seed, "Random seed")->capture_default_str();
  run->add_option("--out", config.output, "Metrics CSV path (default stdout)");
  run->add_option("--interval", config.interval, "KW checkpoint interval L (default ceil(sqrt(W T)))");
  run->add_option("--sigma", config.sigma, "IVM noise scale")->capture_default_str();
  run->add_option("--bandwidth", config.bandwidth, "IVM kernel bandwidth h")->capture_default_str();
  run->add_option("--parallelism", parallelism, "serial | openmp")->capture_default_str();
  run->add_option("--threads", threads, "OpenMP threads (default: runtime choice)");

  std::string gen_spec;
  uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Write a synthetic stream as JSONL");
  gen_cmd->add_option("--spec", gen_spec, "Generator spec")->required();
  gen_cmd->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--out", gen_out, "Output path (default stdout)");

  std::string verify_config;
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--config", verify_config, "JSON suite options (criteria, seed, parallelism)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      config.algorithm = knapwin::harness::ParseAlgorithm(algo);
      config.utility = knapwin::harness::ParseUtility(utility);
      config.parallelism = knapwin::ParseParallelism(parallelism);
      knapwin::SetMaxThreads(threads);
      return Run(config);
    }
    if (*gen_cmd) {
      const auto spec = knapwin::harness::GeneratorSpec::Parse(gen_spec);
      const auto data = knapwin::harness::Generate(spec, gen_seed);
      if (gen_out.empty() || gen_out == "-") {
        knapwin::harness::WriteJsonl(data, std::cout);
      } else {
        std::ofstream out(gen_out);
        if (!out) throw std::runtime_error("cannot write " + gen_out);
        knapwin::harness::WriteJsonl(data, out);
      }
      return 0;
    }
    if (*verify) {
      knapwin::acceptance::SuiteOptions options;
      if (!verify_config.empty()) options = knapwin::acceptance::LoadSuiteOptions(verify_config);
      const auto results = knapwin::acceptance::RunSuite(options, std::cout);
      for (const auto& r : results) {
        if (!r.passed) return 1;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "knapwin: " << e.what() << std::endl;
    return 2;
  }
  return 0;
}
