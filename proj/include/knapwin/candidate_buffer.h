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

#ifndef KNAPWIN_CANDIDATE_BUFFER_H_
#define KNAPWIN_CANDIDATE_BUFFER_H_

#include <span>
#include <vector>

#include "knapwin/core.h"

namespace knapwin {

struct BufferParams {
  // Admission factor: an element enters when its gain reaches alpha times
  // the candidate threshold.
  double alpha = 0.5;
  // Capacity eta.
  size_t capacity = 20;
};

// Bounded pool of near-miss elements attached to one candidate and used
// only by query-time post-processing.
class CandidateBuffer {
 public:
  struct Entry {
    ElementPtr element;
    // Delta f(v | S_phi) / delta(v) when the element was admitted. Used as
    // the eviction key.
    double cost_effectiveness;
  };

  explicit CandidateBuffer(BufferParams params);

  static double AdmissionThreshold(double alpha, double max_cost, double phi,
                                   int d) {
    return alpha * max_cost * phi / (1.0 + d);
  }

  bool Admits(double gain, const Element& element, double phi, int d) const {
    return gain >= AdmissionThreshold(params_.alpha, element.max_cost(), phi, d);
  }

  // Appends the entry, then while over capacity: drops every entry that no
  // longer fits next to `solution_totals`, then evicts minimum
  // cost-effectiveness entries (older first on ties) until at capacity.
  void Insert(Entry entry, std::span<const double> solution_totals,
              const KnapsackSpec& spec);
  // Insert({element, cost_effectiveness}, ...) without touching the element's
  // reference count when the entry would be dropped at once.
  void Offer(const ElementPtr& element, double cost_effectiveness,
             std::span<const double> solution_totals, const KnapsackSpec& spec);

  std::span<const Entry> entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const BufferParams& params() const { return params_; }

 private:
  BufferParams params_;
  // Min-heap on eviction order.
  std::vector<Entry> entries_;
  // Totals of the last purge, and whether every entry fits next to them.
  std::vector<double> checked_totals_;
  bool all_verified_ = false;
};

}  // namespace knapwin

#endif  // KNAPWIN_CANDIDATE_BUFFER_H_
