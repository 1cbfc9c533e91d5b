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

#ifndef KNAPWIN_MODULAR_H_
#define KNAPWIN_MODULAR_H_

#include <memory>

#include "knapwin/core.h"

namespace knapwin {

// Additive utility f(S) = sum of the members' ModularValue payloads. The
// simplest monotone submodular function; used by synthetic benchmarks and
// hand-checkable tests.
class ModularOracle : public UtilityOracle {
 public:
  double Value() const override { return value_; }
  double Gain(const Element& element) const override;
  void Insert(const Element& element) override;
  std::unique_ptr<UtilityOracle> Clone() const override;
  void Reset() override { value_ = 0.0; }
  std::string Name() const override { return "modular"; }

 private:
  double value_ = 0.0;
};

}  // namespace knapwin

#endif  // KNAPWIN_MODULAR_H_
