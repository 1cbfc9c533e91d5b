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

#include "knapwin/ivm.h"

#include <cmath>
#include <stdexcept>

namespace knapwin {

IvmOracle::IvmOracle(IvmParams params)
    : params_(params),
      inv_sigma2_(1.0 / (params.sigma * params.sigma)),
      inv_h2_(1.0 / (params.bandwidth * params.bandwidth)) {
  if (!(params.sigma > 0.0) || !(params.bandwidth > 0.0)) {
    throw std::invalid_argument("ivm: sigma and bandwidth must be positive");
  }
}

const std::vector<double>& IvmOracle::Features(const Element& element) const {
  const auto* fv = std::get_if<FeatureVector>(&element.payload());
  if (fv == nullptr) {
    throw std::invalid_argument("ivm oracle: element " +
                                std::to_string(element.ordinal()) +
                                " has no feature vector");
  }
  if (params_.dimension != 0 && fv->values.size() != params_.dimension) {
    throw std::invalid_argument(
        "ivm oracle: element " + std::to_string(element.ordinal()) + " has " +
        std::to_string(fv->values.size()) + " features, expected " +
        std::to_string(params_.dimension));
  }
  return fv->values;
}

double IvmOracle::Kernel(const std::vector<double>& a,
                         const std::vector<double>& b) const {
  double dist2 = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    dist2 += diff * diff;
  }
  return std::exp(-dist2 * inv_h2_);
}

double IvmOracle::SchurComplement(const std::vector<double>& x,
                                  std::vector<double>& row) const {
  const size_t n = points_.size();
  row.resize(n);
  // Forward substitution L z = c with c_i = sigma^-2 k(x_i, x).
  double zz = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double acc = inv_sigma2_ * Kernel(points_[i], x);
    const double* li = &factor_[i * (i + 1) / 2];
    for (size_t j = 0; j < i; ++j) acc -= li[j] * row[j];
    row[i] = acc / li[i];
    zz += row[i] * row[i];
  }
  return 1.0 + inv_sigma2_ * Kernel(x, x) - zz;
}

double IvmOracle::Gain(const Element& element) const {
  const auto& x = Features(element);
  if (!points_.empty() && x.size() != points_.front().size()) {
    throw std::invalid_argument("ivm oracle: feature dimension mismatch");
  }
  std::vector<double> row;
  const double schur = SchurComplement(x, row);
  if (schur <= kPivotFloor) return 0.0;
  return 0.5 * std::log(schur);
}

void IvmOracle::Insert(const Element& element) {
  const auto& x = Features(element);
  if (!points_.empty() && x.size() != points_.front().size()) {
    throw std::invalid_argument("ivm oracle: feature dimension mismatch");
  }
  std::vector<double> row;
  const double schur = SchurComplement(x, row);
  if (schur <= kPivotFloor) {
    Refactorize(x);
    return;
  }
  const double diag = std::sqrt(schur);
  factor_.insert(factor_.end(), row.begin(), row.end());
  factor_.push_back(diag);
  points_.push_back(x);
  value_ += std::log(diag);
}

void IvmOracle::Refactorize(const std::vector<double>& x) {
  std::vector<std::vector<double>> points = points_;
  points.push_back(x);
  const size_t n = points.size();
  std::vector<double> factor;
  std::vector<std::vector<double>> kept;
  double value = 0.0;
  for (size_t r = 0; r < n; ++r) {
    const size_t m = kept.size();
    std::vector<double> row(m);
    double zz = 0.0;
    for (size_t i = 0; i < m; ++i) {
      double acc = inv_sigma2_ * Kernel(kept[i], points[r]);
      const double* li = &factor[i * (i + 1) / 2];
      for (size_t j = 0; j < i; ++j) acc -= li[j] * row[j];
      row[i] = acc / li[i];
      zz += row[i] * row[i];
    }
    const double schur = 1.0 + inv_sigma2_ * Kernel(points[r], points[r]) - zz;
    if (schur <= kPivotFloor) continue;
    const double diag = std::sqrt(schur);
    factor.insert(factor.end(), row.begin(), row.end());
    factor.push_back(diag);
    kept.push_back(points[r]);
    value += std::log(diag);
  }
  points_ = std::move(kept);
  factor_ = std::move(factor);
  value_ = value;
}

std::unique_ptr<UtilityOracle> IvmOracle::Clone() const {
  return std::make_unique<IvmOracle>(*this);
}

void IvmOracle::Reset() {
  points_.clear();
  factor_.clear();
  value_ = 0.0;
}

}  // namespace knapwin
