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

// Per-knapsack cost assignment schemes and the seeded RNG they draw from.

#ifndef KNAPWIN_HARNESS_COSTS_H_
#define KNAPWIN_HARNESS_COSTS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "knapwin/core.h"

namespace knapwin::harness {

// splitmix64-seeded xoshiro256**; platform independent, unlike the
// standard distributions.
class Rng {
 public:
  explicit Rng(uint64_t seed);
  uint64_t Next();
  // Uniform in [0, 1).
  double Uniform();
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  // Uniform integer in [0, n).
  uint64_t Below(uint64_t n);

 private:
  uint64_t s_[4];
};

struct CostScheme {
  enum class Kind {
    // 1 / k
    kUniformK,
    // (1 / k) * l / mean_l
    kLength,
    // clamp(cap * log(1 + mean_fl) / log(2 + fl), 1 / (10 k), cap): more
    // followers, lower cost.
    kInfluence,
    // U(lo, hi), independent per element and knapsack.
    kIidUniform,
    kFixed,
  };
  Kind kind = Kind::kFixed;
  double a = 0.0;
  double b = 0.0;

  std::string Describe() const;
};

// Stream statistics some schemes normalize by.
struct CostContext {
  double mean_length = 1.0;
  double mean_followers = 0.0;
};

// Running means over a stream's token bags and item sets.
class ContextAccumulator {
 public:
  void Add(const Payload& payload);
  CostContext Finish() const;

 private:
  double total_length_ = 0.0;
  double total_followers_ = 0.0;
  size_t count_ = 0;
};

// One scheme per knapsack. Text form: schemes joined by '+', each one of
//   uniform_k:K  length:K  influence:K:CAP  iid:LO:HI  fixed:C
// (`name(a,b)` is accepted too, and `uniform`/`iid_uniform` alias `iid`).
// A single scheme is replicated across all d knapsacks.
class CostModel {
 public:
  static CostModel Parse(const std::string& text, int d);

  // Throws std::invalid_argument naming the scheme if a cost leaves (0, 1]
  // or the payload lacks what the scheme reads.
  std::vector<double> Assign(const Payload& payload, const CostContext& context,
                             Rng& rng) const;

  const std::vector<CostScheme>& schemes() const { return schemes_; }
  int d() const { return static_cast<int>(schemes_.size()); }

 private:
  std::vector<CostScheme> schemes_;
};

double AssignCost(const CostScheme& scheme, const Payload& payload,
                  const CostContext& context, Rng& rng);

}  // namespace knapwin::harness

#endif  // KNAPWIN_HARNESS_COSTS_H_
