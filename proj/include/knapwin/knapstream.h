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

// KnapStream: single-pass submodular maximization under a d-knapsack
// constraint over an append-only stream. A geometric grid of OPT estimates
// phi = (1 + lambda)^l, each owning a thresholded candidate, brackets the
// unknown optimum between the running bounds m and M (1 + d).

#ifndef KNAPWIN_KNAPSTREAM_H_
#define KNAPWIN_KNAPSTREAM_H_

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "knapwin/candidate_buffer.h"
#include "knapwin/core.h"
#include "knapwin/parallel.h"

namespace knapwin {

struct KnapStreamParams {
  double lambda = 0.1;
  int d = 1;
  // Attach a bounded buffer to every candidate (used by KnapWindowPlus).
  std::optional<BufferParams> buffer;
  // Policy for the per-candidate gain and insertion loop.
  Parallelism parallelism = Parallelism::kSerial;
};

// One thresholded partial solution S_phi.
struct Candidate {
  int exponent = 0;
  double phi = 0.0;
  SolutionSet solution;
  std::unique_ptr<UtilityOracle> oracle;
  std::optional<CandidateBuffer> buffer;

  Candidate(int exponent, double phi, std::unique_ptr<UtilityOracle> oracle,
            int d, const std::optional<BufferParams>& buffer_params);
  Candidate(const Candidate& other);
  Candidate& operator=(const Candidate& other);
  Candidate(Candidate&&) noexcept = default;
  Candidate& operator=(Candidate&&) noexcept = default;

  // delta_t * phi / (1 + d).
  double Threshold(const Element& element, int d) const {
    return element.max_cost() * phi / (1.0 + d);
  }
};

// Offers `element` (whose gain against the candidate is `gain`) to the
// candidate's buffer. No-op without a buffer, for members, and below the
// admission threshold.
void BufferAdd(Candidate& candidate, const ElementPtr& element, double gain,
               const KnapsackSpec& spec);

// Integer exponents l with lower <= base^l <= upper, as a closed range.
// Empty when the interval holds no power of `base` or upper <= 0.
std::optional<std::pair<int, int>> ExponentRange(double lower, double upper,
                                                 double base);

// Upper bound on live candidates: ceil(log_{1+lambda}((1+d)/gamma)) + 1.
size_t CandidateCountBound(double lambda, int d, double gamma_seen);

// KS instance started at checkpoint `start`. Single writer; copies are deep
// (oracles are cloned) and independent.
class KsInstance {
 public:
  KsInstance(int64_t start, KnapStreamParams params, OraclePtr prototype);

  // Bounds update, grid refresh, then the threshold rule on every
  // candidate. If an oracle call fails before anything is committed, the
  // element is skipped with a warning and false is returned.
  bool Process(const ElementPtr& element);
  // Same, with f({v}) already evaluated by the caller.
  bool Process(const ElementPtr& element, double singleton_utility);

  // Updates v_max and, when f({v})/gamma_t beats M, sets M = f({v})/gamma_t
  // and m = f({v}). Returns (m, M).
  std::pair<double, double> UpdateBounds(const ElementPtr& element,
                                         double singleton_utility);
  // Makes candidates exist exactly for m <= (1+lambda)^l <= M (1+d).
  // Dropped candidates are folded into the best-so-far snapshot first.
  // Throws std::logic_error if m > M (1+d).
  std::vector<int> RefreshGrid();

  // argmax over the best-so-far snapshot, live candidates and {v_max}
  // (ties: fewer members, then smaller ordinals).
  SolutionSet Solution() const;
  // f[x, t]: utility of the best solution this instance has ever held.
  double best_utility() const { return best_so_far_.utility; }
  const SolutionSet& best_so_far() const { return best_so_far_; }

  int64_t start() const { return start_; }
  const KnapStreamParams& params() const { return params_; }
  const KnapsackSpec& spec() const { return spec_; }
  double lower_bound() const { return m_; }
  double upper_bound() const { return M_; }
  std::span<const Candidate> candidates() const { return candidates_; }
  size_t num_candidates() const { return candidates_.size(); }
  std::vector<int> exponents() const;
  const Candidate* FindCandidate(int exponent) const;
  const ElementPtr& v_max() const { return v_max_; }
  double v_max_utility() const { return v_max_utility_; }
  // Minimum and maximum single cost seen so far (1 and 0 before any input).
  double gamma_seen() const { return gamma_seen_; }
  double delta_seen() const { return delta_seen_; }
  size_t processed() const { return processed_; }
  // Members plus buffer entries over all candidates.
  size_t StoredElements() const;
  const OraclePtr& prototype() const { return prototype_; }

  // Lists violated invariants (grid coverage, feasibility, cost totals,
  // cached utilities); empty when healthy. Expensive.
  std::vector<std::string> Audit() const;

  // Test hook for exercising grid refresh with bounds no stream produces.
  void OverrideBoundsForTest(double m, double M) {
    m_ = m;
    M_ = M;
  }

 private:
  void FoldIntoBest(const SolutionSet& solution);

  int64_t start_;
  KnapStreamParams params_;
  KnapsackSpec spec_;
  OraclePtr prototype_;
  double base_;
  double m_ = 0.0;
  double M_ = 0.0;
  // Bounds the grid was last built for; NaN forces the first refresh.
  double grid_m_ = std::numeric_limits<double>::quiet_NaN();
  double grid_M_ = std::numeric_limits<double>::quiet_NaN();
  // Sorted by exponent; always a contiguous exponent range.
  std::vector<Candidate> candidates_;
  ElementPtr v_max_;
  double v_max_utility_ = 0.0;
  SolutionSet best_so_far_;
  double gamma_seen_ = 1.0;
  double delta_seen_ = 0.0;
  size_t processed_ = 0;
};

}  // namespace knapwin

#endif  // KNAPWIN_KNAPSTREAM_H_
