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

#ifndef KNAPWIN_IVM_H_
#define KNAPWIN_IVM_H_

#include <memory>
#include <vector>

#include "knapwin/core.h"

namespace knapwin {

struct IvmParams {
  double sigma = 1.0;
  double bandwidth = 0.75;
  // Feature dimension; 0 accepts the dimension of the first inserted point.
  size_t dimension = 0;
};

// Informative Vector Machine utility
//   f(S) = 1/2 log det(I + sigma^-2 K_{S,S}),
// with the squared-exponential kernel k(a, b) = exp(-|a - b|^2 / h^2).
//
// Keeps a lower-triangular Cholesky factor L of I + sigma^-2 K_{S,S}, grown
// one row per insertion, so f(S) = sum_i log L_ii and a gain costs one
// triangular solve.
class IvmOracle : public UtilityOracle {
 public:
  // Schur complements at or below this are treated as rank deficient.
  static constexpr double kPivotFloor = 1e-12;

  explicit IvmOracle(IvmParams params = {});

  double Value() const override { return value_; }
  double Gain(const Element& element) const override;
  void Insert(const Element& element) override;
  std::unique_ptr<UtilityOracle> Clone() const override;
  void Reset() override;
  std::string Name() const override { return "ivm"; }

  double Kernel(const std::vector<double>& a, const std::vector<double>& b) const;
  const IvmParams& params() const { return params_; }
  // Points that carry information (rank-deficient insertions are dropped).
  size_t rank() const { return points_.size(); }
  // L_ij for j <= i.
  double FactorAt(size_t i, size_t j) const {
    return factor_[i * (i + 1) / 2 + j];
  }

 private:
  const std::vector<double>& Features(const Element& element) const;
  // Returns the Schur complement of appending `x` and writes the new factor
  // row (without its diagonal) to `row`.
  double SchurComplement(const std::vector<double>& x,
                         std::vector<double>& row) const;
  // Full Cholesky of the stored points plus `x`; drops `x` if its pivot is
  // still rank deficient.
  void Refactorize(const std::vector<double>& x);

  IvmParams params_;
  double inv_sigma2_;
  double inv_h2_;
  std::vector<std::vector<double>> points_;
  // Packed row-major lower triangle of L.
  std::vector<double> factor_;
  double value_ = 0.0;
};

}  // namespace knapwin

#endif  // KNAPWIN_IVM_H_
