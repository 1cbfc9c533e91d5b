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

#include "knapwin/knapwindowplus.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "knapwin/cost_effect_greedy.h"

namespace knapwin {

std::vector<size_t> PruneCheckpoints(std::span<const double> utilities,
                                     double beta) {
  std::vector<size_t> alive(utilities.size());
  for (size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  bool deleted = true;
  while (deleted) {
    deleted = false;
    for (size_t i = 0; i + 2 < alive.size(); ++i) {
      if (utilities[alive[i + 2]] >= (1.0 - beta) * utilities[alive[i]]) {
        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(i + 1));
        deleted = true;
        break;
      }
    }
  }
  return alive;
}

bool SatisfiesTrichotomy(std::span<const double> utilities, double beta) {
  for (size_t i = 0; i + 2 < utilities.size(); ++i) {
    const double bar = (1.0 - beta) * utilities[i];
    if (utilities[i + 1] >= bar && utilities[i + 2] >= bar) return false;
  }
  return true;
}

double CheckpointCountBound(double theta, double beta) {
  if (!std::isfinite(theta)) return std::numeric_limits<double>::infinity();
  return std::ceil(2.0 * std::log(theta) / -std::log1p(-beta)) + 2.0;
}

KnapWindowPlus::KnapWindowPlus(KnapWindowPlusParams params, OraclePtr prototype)
    : params_(params), prototype_(std::move(prototype)) {
  if (params_.window == 0) throw std::invalid_argument("window must be >= 1");
  if (!(params_.beta > 0.0 && params_.beta < 1.0)) {
    throw std::invalid_argument("beta must lie in (0, 1)");
  }
  if (!prototype_) throw std::invalid_argument("KnapWindowPlus needs an oracle");
  ks_params_.lambda = params_.lambda;
  ks_params_.d = params_.d;
  ks_params_.buffer = params_.buffer;
  ks_params_.parallelism = Parallelism::kSerial;
  CandidateBuffer probe_buffer(params_.buffer);
  KsInstance probe(1, ks_params_, prototype_);
}

int64_t KnapWindowPlus::window_start() const {
  return std::max<int64_t>(1, t_ - static_cast<int64_t>(params_.window) + 1);
}

void KnapWindowPlus::Process(const ElementPtr& element) {
  ProcessBatch(std::span<const ElementPtr>(&element, 1));
}

void KnapWindowPlus::ProcessBatch(std::span<const ElementPtr> batch) {
  if (batch.empty()) return;
  for (size_t i = 0; i < batch.size(); ++i) {
    const int64_t expected = t_ + 1 + static_cast<int64_t>(i);
    if (batch[i]->ordinal() != expected) {
      throw std::invalid_argument("out-of-order element: expected ordinal " +
                                  std::to_string(expected) + ", got " +
                                  std::to_string(batch[i]->ordinal()));
    }
  }
  std::vector<ElementPtr> accepted;
  std::vector<double> singletons;
  accepted.reserve(batch.size());
  singletons.reserve(batch.size());
  for (const auto& e : batch) {
    try {
      singletons.push_back(prototype_->Gain(*e));
      accepted.push_back(e);
    } catch (const std::exception& ex) {
      LogWarning("skipping element " + std::to_string(e->ordinal()) + ": " +
                 ex.what());
    }
  }

  instances_.emplace_back(batch.front()->ordinal(), ks_params_, prototype_);
  t_ = batch.back()->ordinal();
  const int64_t t_start = window_start();
  while (instances_.size() >= 2 && instances_[1].start() < t_start) {
    instances_.pop_front();
  }

  ParallelFor(instances_.size(), params_.parallelism, [&](size_t i) {
    for (size_t k = 0; k < accepted.size(); ++k) {
      instances_[i].Process(accepted[k], singletons[k]);
    }
  });

  const auto f = utilities();
  const auto keep = PruneCheckpoints(f, params_.beta);
  if (keep.size() != instances_.size()) {
    std::deque<KsInstance> survivors;
    for (size_t idx : keep) survivors.push_back(std::move(instances_[idx]));
    instances_ = std::move(survivors);
  }
}

SolutionSet KnapWindowPlus::Query() const {
  if (instances_.empty()) return SolutionSet(params_.d);
  const int64_t t_start = window_start();
  const bool head_expired = instances_.front().start() < t_start;
  // A fresh checkpoint opens every slide, so an expired head always has a
  // live successor.
  const KsInstance& governing = head_expired ? instances_[1] : instances_[0];
  const KsInstance* expired = head_expired ? &instances_[0] : nullptr;
  const KnapsackSpec& spec = governing.spec();
  const auto candidates = governing.candidates();

  std::vector<std::vector<ElementPtr>> pools(candidates.size());
  for (size_t i = 0; i < candidates.size(); ++i) {
    const Candidate& c = candidates[i];
    auto& pool = pools[i];
    if (c.buffer) {
      for (const auto& entry : c.buffer->entries()) pool.push_back(entry.element);
    }
    if (expired == nullptr) continue;
    const Candidate* matched = expired->FindCandidate(c.exponent);
    if (matched == nullptr) continue;
    auto offer = [&](const ElementPtr& e) {
      if (e->ordinal() < t_start) return;
      if (c.solution.Contains(e->ordinal())) return;
      if (!CheckFeasibility(c.solution.cost_totals, *e, spec)) return;
      pool.push_back(e);
    };
    for (const auto& e : matched->solution.members) offer(e);
    if (matched->buffer) {
      for (const auto& entry : matched->buffer->entries()) offer(entry.element);
    }
  }

  // One extra seed for {v_max}, drawing on every candidate's pool.
  const bool seed_vmax = governing.v_max() != nullptr;
  const size_t n_seeds = candidates.size() + (seed_vmax ? 1 : 0);
  std::vector<SolutionSet> results(n_seeds);
  ParallelFor(n_seeds, params_.parallelism, [&](size_t i) {
    if (i < candidates.size()) {
      auto state = candidates[i].oracle->Clone();
      results[i] = CostEffectGreedy(candidates[i].solution, *state, pools[i], spec);
      return;
    }
    std::vector<ElementPtr> merged;
    std::unordered_set<int64_t> seen{governing.v_max()->ordinal()};
    for (const auto& pool : pools) {
      for (const auto& e : pool) {
        if (seen.insert(e->ordinal()).second) merged.push_back(e);
      }
    }
    auto state = prototype_->CloneEmpty();
    state->Insert(*governing.v_max());
    results[i] = CostEffectGreedy(
        Singleton(governing.v_max(), state->Value()), *state, merged, spec);
  });

  SolutionSet best = governing.Solution();
  for (const auto& r : results) {
    if (Prefer(r, best)) best = r;
  }
  return best;
}

std::vector<int64_t> KnapWindowPlus::checkpoints() const {
  std::vector<int64_t> out;
  for (const auto& inst : instances_) out.push_back(inst.start());
  return out;
}

std::vector<double> KnapWindowPlus::utilities() const {
  std::vector<double> out;
  out.reserve(instances_.size());
  for (const auto& inst : instances_) out.push_back(inst.best_utility());
  return out;
}

double KnapWindowPlus::Theta() const {
  if (instances_.empty()) return 1.0;
  const double first = instances_.front().best_utility();
  const double last = instances_.back().best_utility();
  if (last <= 0.0) return std::numeric_limits<double>::infinity();
  return first / last;
}

size_t KnapWindowPlus::ExpiredCheckpoints() const {
  const int64_t t_start = window_start();
  return static_cast<size_t>(std::count_if(
      instances_.begin(), instances_.end(),
      [&](const KsInstance& inst) { return inst.start() < t_start; }));
}

size_t KnapWindowPlus::StoredElements() const {
  std::unordered_set<int64_t> seen;
  for (const auto& inst : instances_) {
    for (const auto& c : inst.candidates()) {
      for (const auto& e : c.solution.members) seen.insert(e->ordinal());
      if (!c.buffer) continue;
      for (const auto& entry : c.buffer->entries()) {
        seen.insert(entry.element->ordinal());
      }
    }
    if (inst.v_max()) seen.insert(inst.v_max()->ordinal());
  }
  return seen.size();
}

size_t KnapWindowPlus::StoredEntries() const {
  size_t total = 0;
  for (const auto& inst : instances_) total += inst.StoredElements();
  return total;
}

}  // namespace knapwin
