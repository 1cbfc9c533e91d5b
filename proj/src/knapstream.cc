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

#include "knapwin/knapstream.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace knapwin {

Candidate::Candidate(int exponent, double phi,
                     std::unique_ptr<UtilityOracle> oracle, int d,
                     const std::optional<BufferParams>& buffer_params)
    : exponent(exponent), phi(phi), solution(d), oracle(std::move(oracle)) {
  if (buffer_params) buffer.emplace(*buffer_params);
}

Candidate::Candidate(const Candidate& other)
    : exponent(other.exponent),
      phi(other.phi),
      solution(other.solution),
      oracle(other.oracle ? other.oracle->Clone() : nullptr),
      buffer(other.buffer) {}

Candidate& Candidate::operator=(const Candidate& other) {
  if (this != &other) {
    Candidate copy(other);
    *this = std::move(copy);
  }
  return *this;
}

namespace {

// BufferAdd for an element the candidate has never seen.
void OfferNew(Candidate& candidate, const ElementPtr& element, double gain,
              const KnapsackSpec& spec) {
  if (!candidate.buffer) return;
  if (!candidate.buffer->Admits(gain, *element, candidate.phi, spec.d)) return;
  candidate.buffer->Offer(element, CostEffectiveness(*element, gain),
                          candidate.solution.cost_totals, spec);
}

}  // namespace

void BufferAdd(Candidate& candidate, const ElementPtr& element, double gain,
               const KnapsackSpec& spec) {
  if (candidate.solution.Contains(element->ordinal())) return;
  OfferNew(candidate, element, gain, spec);
}

std::optional<std::pair<int, int>> ExponentRange(double lower, double upper,
                                                 double base) {
  if (!(upper > 0.0) || !(lower > 0.0) || lower > upper) return std::nullopt;
  const double log_base = std::log(base);
  int lo = static_cast<int>(std::ceil(std::log(lower) / log_base));
  while (std::pow(base, lo - 1) >= lower) --lo;
  while (std::pow(base, lo) < lower) ++lo;
  int hi = static_cast<int>(std::floor(std::log(upper) / log_base));
  while (std::pow(base, hi + 1) <= upper) ++hi;
  while (std::pow(base, hi) > upper) --hi;
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

size_t CandidateCountBound(double lambda, int d, double gamma_seen) {
  const double ratio = (1.0 + d) / gamma_seen;
  return static_cast<size_t>(std::ceil(std::log(ratio) / std::log1p(lambda))) +
         1;
}

KsInstance::KsInstance(int64_t start, KnapStreamParams params,
                       OraclePtr prototype)
    : start_(start),
      params_(params),
      spec_(params.d),
      prototype_(std::move(prototype)),
      base_(1.0 + params.lambda),
      best_so_far_(params.d) {
  if (!(params_.lambda > 0.0 && params_.lambda < 1.0)) {
    throw std::invalid_argument("lambda must lie in (0, 1)");
  }
  if (!prototype_) throw std::invalid_argument("KS instance needs an oracle");
}

bool KsInstance::Process(const ElementPtr& element) {
  double singleton = 0.0;
  try {
    singleton = prototype_->Gain(*element);
  } catch (const std::exception& e) {
    LogWarning("skipping element " + std::to_string(element->ordinal()) +
               ": " + e.what());
    return false;
  }
  return Process(element, singleton);
}

bool KsInstance::Process(const ElementPtr& element, double singleton_utility) {
  if (element->dimension() != spec_.d) {
    throw std::invalid_argument(
        "element " + std::to_string(element->ordinal()) + " has " +
        std::to_string(element->dimension()) + " costs, expected " +
        std::to_string(spec_.d));
  }
  const auto n_old = candidates_.size();
  const int old_lo = n_old == 0 ? 0 : candidates_.front().exponent;
  std::vector<double> gains(n_old);
  try {
    ParallelFor(n_old, params_.parallelism, [&](size_t i) {
      gains[i] = candidates_[i].oracle->Gain(*element);
    });
  } catch (const std::exception& e) {
    LogWarning("skipping element " + std::to_string(element->ordinal()) +
               ": " + e.what());
    return false;
  }

  const ElementPtr previous_vmax = v_max_;
  UpdateBounds(element, singleton_utility);
  if (m_ != grid_m_ || M_ != grid_M_) RefreshGrid();

  // Unchanged candidates were folded into the snapshot already.
  std::vector<char> inserted(candidates_.size(), 0);
  ParallelFor(candidates_.size(), params_.parallelism, [&](size_t i) {
    Candidate& c = candidates_[i];
    const int offset = c.exponent - old_lo;
    // Exponents outside the old range are new, empty candidates.
    const double gain = (offset >= 0 && static_cast<size_t>(offset) < n_old)
                            ? gains[offset]
                            : singleton_utility;
    if (gain >= c.Threshold(*element, spec_.d) &&
        CheckFeasibility(c.solution.cost_totals, *element, spec_)) {
      c.oracle->Insert(*element);
      c.solution.Append(element, c.oracle->Value());
      inserted[i] = 1;
    } else {
      // Each instance sees an element once, so it cannot be a member.
      OfferNew(c, element, gain, spec_);
    }
  });

  for (size_t i = 0; i < candidates_.size(); ++i) {
    if (inserted[i]) FoldIntoBest(candidates_[i].solution);
  }
  if (v_max_ != previous_vmax) FoldIntoBest(Singleton(v_max_, v_max_utility_));
  ++processed_;
  return true;
}

std::pair<double, double> KsInstance::UpdateBounds(const ElementPtr& element,
                                                   double singleton_utility) {
  if (!v_max_ || singleton_utility > v_max_utility_) {
    v_max_ = element;
    v_max_utility_ = singleton_utility;
  }
  const double gamma = element->min_cost();
  gamma_seen_ = std::min(gamma_seen_, gamma);
  delta_seen_ = std::max(delta_seen_, element->max_cost());
  if (singleton_utility / gamma > M_) {
    M_ = singleton_utility / gamma;
    m_ = singleton_utility;
  }
  return {m_, M_};
}

std::vector<int> KsInstance::RefreshGrid() {
  const double upper = M_ * (1.0 + spec_.d);
  if (m_ > upper) {
    std::ostringstream msg;
    msg << "corrupted KS bounds: m=" << m_ << " exceeds M(1+d)=" << upper;
    throw std::logic_error(msg.str());
  }
  grid_m_ = m_;
  grid_M_ = M_;
  const auto range = ExponentRange(m_, upper, base_);
  if (!range) {
    for (const auto& c : candidates_) FoldIntoBest(c.solution);
    candidates_.clear();
    return {};
  }
  const auto [lo, hi] = *range;
  const bool unchanged = !candidates_.empty() &&
                         candidates_.front().exponent == lo &&
                         candidates_.back().exponent == hi;
  if (!unchanged) {
    std::vector<Candidate> next;
    next.reserve(static_cast<size_t>(hi - lo + 1));
    size_t i = 0;
    for (int l = lo; l <= hi; ++l) {
      while (i < candidates_.size() && candidates_[i].exponent < l) {
        FoldIntoBest(candidates_[i].solution);
        ++i;
      }
      if (i < candidates_.size() && candidates_[i].exponent == l) {
        next.push_back(std::move(candidates_[i]));
        ++i;
      } else {
        next.emplace_back(l, std::pow(base_, l), prototype_->CloneEmpty(),
                          spec_.d, params_.buffer);
      }
    }
    for (; i < candidates_.size(); ++i) FoldIntoBest(candidates_[i].solution);
    candidates_ = std::move(next);
  }
  return exponents();
}

void KsInstance::FoldIntoBest(const SolutionSet& solution) {
  if (Prefer(solution, best_so_far_)) best_so_far_ = solution;
}

SolutionSet KsInstance::Solution() const {
  const SolutionSet* best = &best_so_far_;
  for (const auto& c : candidates_) {
    if (Prefer(c.solution, *best)) best = &c.solution;
  }
  if (v_max_) {
    SolutionSet single = Singleton(v_max_, v_max_utility_);
    if (Prefer(single, *best)) return single;
  }
  return *best;
}

std::vector<int> KsInstance::exponents() const {
  std::vector<int> out;
  out.reserve(candidates_.size());
  for (const auto& c : candidates_) out.push_back(c.exponent);
  return out;
}

const Candidate* KsInstance::FindCandidate(int exponent) const {
  if (candidates_.empty()) return nullptr;
  const int offset = exponent - candidates_.front().exponent;
  if (offset < 0 || static_cast<size_t>(offset) >= candidates_.size()) {
    return nullptr;
  }
  return &candidates_[static_cast<size_t>(offset)];
}

size_t KsInstance::StoredElements() const {
  size_t total = 0;
  for (const auto& c : candidates_) {
    total += c.solution.size();
    if (c.buffer) total += c.buffer->size();
  }
  return total;
}

std::vector<std::string> KsInstance::Audit() const {
  std::vector<std::string> problems;
  const auto range = ExponentRange(m_, M_ * (1.0 + spec_.d), base_);
  const auto exps = exponents();
  if (!range) {
    if (!exps.empty()) problems.push_back("candidates exist for an empty grid");
  } else {
    std::vector<int> expected;
    for (int l = range->first; l <= range->second; ++l) expected.push_back(l);
    if (exps != expected) problems.push_back("grid does not match [m, M(1+d)]");
  }
  for (const auto& c : candidates_) {
    const std::string tag = "candidate l=" + std::to_string(c.exponent) + ": ";
    if (!IsFeasible(c.solution, spec_)) problems.push_back(tag + "infeasible");
    const auto totals = RecomputeCostTotals(c.solution, spec_.d);
    for (int j = 0; j < spec_.d; ++j) {
      if (std::abs(totals[j] - c.solution.cost_totals[j]) > 1e-9) {
        problems.push_back(tag + "cost totals drifted");
        break;
      }
    }
    const double fresh = prototype_->Evaluate(c.solution.members);
    if (std::abs(fresh - c.solution.utility) >
        1e-9 * std::max(1.0, std::abs(fresh))) {
      problems.push_back(tag + "cached utility differs from evaluation");
    }
    if (c.buffer && c.buffer->size() > c.buffer->params().capacity) {
      problems.push_back(tag + "buffer over capacity");
    }
  }
  if (!IsFeasible(best_so_far_, spec_)) {
    problems.push_back("best-so-far snapshot infeasible");
  }
  return problems;
}

}  // namespace knapwin
