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

// KnapWindowPlus: a KS instance per slide indexed by SubKnapChk, which
// drops any checkpoint whose utility is (1 - beta)-approximated by the
// checkpoint two positions later. Candidates carry bounded buffers that a
// query folds back in with cost-effective greedy. The active window itself
// is never stored.

#ifndef KNAPWIN_KNAPWINDOWPLUS_H_
#define KNAPWIN_KNAPWINDOWPLUS_H_

#include <cstdint>
#include <deque>
#include <span>
#include <vector>

#include "knapwin/candidate_buffer.h"
#include "knapwin/core.h"
#include "knapwin/knapstream.h"
#include "knapwin/parallel.h"

namespace knapwin {

struct KnapWindowPlusParams {
  size_t window = 0;
  double lambda = 0.1;
  double beta = 0.1;
  BufferParams buffer;
  int d = 1;
  // Policy for the per-checkpoint fan-out and the per-candidate
  // post-processing at query time.
  Parallelism parallelism = Parallelism::kSerial;
};

// Applies the pruning rule to checkpoint utilities f[x_1..x_s]: while some
// i has f[x_{i+2}] >= (1 - beta) f[x_i], delete x_{i+1}, scanning from the
// front again after each deletion. Returns the surviving indices.
std::vector<size_t> PruneCheckpoints(std::span<const double> utilities,
                                     double beta);

// True unless some i has both f[x_{i+1}] and f[x_{i+2}] at or above
// (1 - beta) f[x_i].
bool SatisfiesTrichotomy(std::span<const double> utilities, double beta);

// ceil(2 log(theta) / log(1 / (1 - beta))) + 2; +inf for unbounded theta.
double CheckpointCountBound(double theta, double beta);

class KnapWindowPlus {
 public:
  KnapWindowPlus(KnapWindowPlusParams params, OraclePtr prototype);

  // Equivalent to ProcessBatch({element}).
  void Process(const ElementPtr& element);
  // One slide: opens a checkpoint at the batch's first ordinal, drops all
  // expired checkpoints but the newest, feeds the batch to every instance,
  // then prunes. Ordinals must continue 1, 2, 3, ...
  void ProcessBatch(std::span<const ElementPtr> batch);

  // Post-processed solution for the active window. Live instances are not
  // modified.
  SolutionSet Query() const;

  int64_t time() const { return t_; }
  int64_t window_start() const;
  size_t num_checkpoints() const { return instances_.size(); }
  std::vector<int64_t> checkpoints() const;
  // f[x_i, t] for every checkpoint.
  std::vector<double> utilities() const;
  const KsInstance& instance(size_t i) const { return instances_[i]; }
  // f[x_1, t] / f[x_s, t].
  double Theta() const;
  size_t ExpiredCheckpoints() const;
  // Distinct elements referenced by candidate members, buffers and v_max
  // over all checkpoints.
  size_t StoredElements() const;
  // Same references counted once per candidate that holds them.
  size_t StoredEntries() const;
  const KnapWindowPlusParams& params() const { return params_; }

 private:
  KnapWindowPlusParams params_;
  OraclePtr prototype_;
  KnapStreamParams ks_params_;
  int64_t t_ = 0;
  std::deque<KsInstance> instances_;
};

}  // namespace knapwin

#endif  // KNAPWIN_KNAPWINDOWPLUS_H_
