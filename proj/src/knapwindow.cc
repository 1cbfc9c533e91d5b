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

#include "knapwin/knapwindow.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace knapwin {

size_t DefaultInterval(size_t window, size_t slide) {
  const double product = static_cast<double>(window) * static_cast<double>(slide);
  auto interval = static_cast<size_t>(std::ceil(std::sqrt(product)));
  // Guard against sqrt rounding for perfect squares.
  while (interval > 1 && (interval - 1) * (interval - 1) >= window * slide) {
    --interval;
  }
  return std::max<size_t>(interval, 1);
}

KnapWindow::KnapWindow(KnapWindowParams params, OraclePtr prototype)
    : params_(params), prototype_(std::move(prototype)) {
  if (params_.window == 0) throw std::invalid_argument("window must be >= 1");
  if (params_.interval == 0) params_.interval = DefaultInterval(params_.window, 1);
  if (params_.interval > params_.window) {
    throw std::invalid_argument("checkpoint interval exceeds the window");
  }
  if (!prototype_) throw std::invalid_argument("KnapWindow needs an oracle");
  ks_params_.lambda = params_.lambda;
  ks_params_.d = params_.d;
  ks_params_.parallelism = Parallelism::kSerial;
  // Validates lambda early.
  KsInstance probe(1, ks_params_, prototype_);
}

int64_t KnapWindow::window_start() const {
  return std::max<int64_t>(1, t_ - static_cast<int64_t>(params_.window) + 1);
}

void KnapWindow::Process(const ElementPtr& element) {
  if (element->ordinal() != t_ + 1) {
    throw std::invalid_argument("out-of-order element: expected ordinal " +
                                std::to_string(t_ + 1) + ", got " +
                                std::to_string(element->ordinal()));
  }
  double singleton = 0.0;
  try {
    singleton = prototype_->Gain(*element);
  } catch (const std::exception& e) {
    // The element still occupies its window slot but nobody selects it.
    LogWarning("skipping element " + std::to_string(element->ordinal()) +
               ": " + e.what());
    t_ = element->ordinal();
    return;
  }
  t_ = element->ordinal();

  active_.push_back({element, singleton});
  while (active_.size() > params_.window) active_.pop_front();

  if ((t_ - 1) % static_cast<int64_t>(params_.interval) == 0) {
    instances_.emplace_back(t_, ks_params_, prototype_);
  }
  const int64_t t_start = window_start();
  while (!instances_.empty() && instances_.front().start() < t_start) {
    instances_.pop_front();
  }

  ParallelFor(instances_.size(), params_.parallelism, [&](size_t i) {
    instances_[i].Process(element, singleton);
  });
}

void KnapWindow::ProcessBatch(std::span<const ElementPtr> batch) {
  for (const auto& e : batch) Process(e);
}

SolutionSet KnapWindow::Query() const {
  if (instances_.empty()) return SolutionSet(params_.d);
  KsInstance head = instances_.front();
  for (const auto& stored : active_) {
    if (stored.element->ordinal() >= head.start()) break;
    head.Process(stored.element, stored.singleton);
  }
  return head.Solution();
}

std::vector<int64_t> KnapWindow::checkpoints() const {
  std::vector<int64_t> out;
  for (const auto& inst : instances_) out.push_back(inst.start());
  return out;
}

size_t KnapWindow::StoredElements() const {
  // Every checkpoint starts inside the window, so candidate members are
  // active elements too.
  return active_.size();
}

size_t KnapWindow::MaxCheckpoints() const {
  return (params_.window + params_.interval - 1) / params_.interval + 1;
}

}  // namespace knapwin
