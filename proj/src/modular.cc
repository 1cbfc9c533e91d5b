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

#include "knapwin/modular.h"

#include <stdexcept>

namespace knapwin {

double ModularOracle::Gain(const Element& element) const {
  const auto* v = std::get_if<ModularValue>(&element.payload());
  if (v == nullptr) {
    throw std::invalid_argument("modular oracle: element " +
                                std::to_string(element.ordinal()) +
                                " has no value");
  }
  if (v->value < 0.0) {
    throw std::invalid_argument("modular oracle: element " +
                                std::to_string(element.ordinal()) +
                                " has a negative value");
  }
  return v->value;
}

void ModularOracle::Insert(const Element& element) {
  value_ += Gain(element);
}

std::unique_ptr<UtilityOracle> ModularOracle::Clone() const {
  return std::make_unique<ModularOracle>(*this);
}

}  // namespace knapwin
