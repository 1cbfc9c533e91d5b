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

// KnapWindow: KS instances at equally spaced checkpoints over a stored
// sliding window. A query post-processes the unprocessed window prefix on a
// copy of the oldest live instance.

#ifndef KNAPWIN_KNAPWINDOW_H_
#define KNAPWIN_KNAPWINDOW_H_

#include <cstdint>
#include <deque>
#include <vector>

#include "knapwin/core.h"
#include "knapwin/knapstream.h"
#include "knapwin/parallel.h"

namespace knapwin {

struct KnapWindowParams {
  size_t window = 0;
  // Checkpoint interval L; 0 selects DefaultInterval(window, 1).
  size_t interval = 0;
  double lambda = 0.1;
  int d = 1;
  // Policy for the per-checkpoint fan-out.
  Parallelism parallelism = Parallelism::kSerial;
};

// ceil(sqrt(W * T)) for slides of T elements.
size_t DefaultInterval(size_t window, size_t slide);

class KnapWindow {
 public:
  KnapWindow(KnapWindowParams params, OraclePtr prototype);

  // Ordinals must be 1, 2, 3, ...; anything else throws
  // std::invalid_argument. A checkpoint opens at t = 1, L+1, 2L+1, ...
  void Process(const ElementPtr& element);
  void ProcessBatch(std::span<const ElementPtr> batch);

  // Solution for the active window [t', t]. Does not modify the state.
  SolutionSet Query() const;

  int64_t time() const { return t_; }
  int64_t window_start() const;
  size_t num_checkpoints() const { return instances_.size(); }
  std::vector<int64_t> checkpoints() const;
  const KsInstance& instance(size_t i) const { return instances_[i]; }
  size_t interval() const { return params_.interval; }
  // Distinct stored elements, i.e. the active window.
  size_t StoredElements() const;
  size_t MaxCheckpoints() const;

 private:
  struct Stored {
    ElementPtr element;
    double singleton;
  };

  KnapWindowParams params_;
  OraclePtr prototype_;
  KnapStreamParams ks_params_;
  int64_t t_ = 0;
  std::deque<Stored> active_;
  std::deque<KsInstance> instances_;
};

}  // namespace knapwin

#endif  // KNAPWIN_KNAPWINDOW_H_
