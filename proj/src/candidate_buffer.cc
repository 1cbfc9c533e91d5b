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

#include "knapwin/candidate_buffer.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace knapwin {

CandidateBuffer::CandidateBuffer(BufferParams params) : params_(params) {
  if (!(params_.alpha > 0.0 && params_.alpha < 1.0)) {
    throw std::invalid_argument("buffer alpha must lie in (0, 1)");
  }
  if (params_.capacity == 0) {
    throw std::invalid_argument("buffer capacity must be positive");
  }
}

namespace {

// True when `a` is evicted before `b`: lower cost-effectiveness, then older.
bool EvictsFirst(const CandidateBuffer::Entry& a,
                 const CandidateBuffer::Entry& b) {
  if (a.cost_effectiveness != b.cost_effectiveness) {
    return a.cost_effectiveness < b.cost_effectiveness;
  }
  return a.element->ordinal() < b.element->ordinal();
}

// Heap order with the next victim on top.
bool HeapOrder(const CandidateBuffer::Entry& a, const CandidateBuffer::Entry& b) {
  return EvictsFirst(b, a);
}

}  // namespace

void CandidateBuffer::Insert(Entry entry, std::span<const double> solution_totals,
                             const KnapsackSpec& spec) {
  Offer(entry.element, entry.cost_effectiveness, solution_totals, spec);
}

void CandidateBuffer::Offer(const ElementPtr& element, double cost_effectiveness,
                            std::span<const double> solution_totals,
                            const KnapsackSpec& spec) {
  const bool same_totals = std::equal(solution_totals.begin(), solution_totals.end(),
                                      checked_totals_.begin(), checked_totals_.end());
  if (entries_.size() < params_.capacity) {
    all_verified_ = all_verified_ && same_totals &&
                    CheckFeasibility(solution_totals, *element, spec);
    entries_.push_back({element, cost_effectiveness});
    std::push_heap(entries_.begin(), entries_.end(), HeapOrder);
    return;
  }

  if (all_verified_ && same_totals) {
    // Nothing to purge but the newcomer, and at most one eviction.
    const Entry& victim = entries_.front();
    if (cost_effectiveness < victim.cost_effectiveness ||
        (cost_effectiveness == victim.cost_effectiveness &&
         element->ordinal() < victim.element->ordinal()) ||
        !CheckFeasibility(solution_totals, *element, spec)) {
      return;
    }
    std::pop_heap(entries_.begin(), entries_.end(), HeapOrder);
    entries_.back() = {element, cost_effectiveness};
    std::push_heap(entries_.begin(), entries_.end(), HeapOrder);
    return;
  }

  entries_.push_back({element, cost_effectiveness});
  entries_.erase(std::remove_if(entries_.begin(), entries_.end(),
                                [&](const Entry& e) {
                                  return !CheckFeasibility(solution_totals, *e.element, spec);
                                }),
                 entries_.end());
  std::make_heap(entries_.begin(), entries_.end(), HeapOrder);
  while (entries_.size() > params_.capacity) {
    std::pop_heap(entries_.begin(), entries_.end(), HeapOrder);
    entries_.pop_back();
  }
  checked_totals_.assign(solution_totals.begin(), solution_totals.end());
  all_verified_ = true;
}

}  // namespace knapwin
