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

#include "knapwin/harness/costs.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace knapwin::harness {
namespace {

uint64_t SplitMix(uint64_t& x) {
  uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t Rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

double ParseNumber(const std::string& text, const std::string& context) {
  try {
    size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("cost scheme '" + context +
                                "': bad number '" + text + "'");
  }
}

// Accepts both `name:a:b` and `name(a,b)`.
std::string Normalize(const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')') return text;
  std::string out = text.substr(0, open);
  for (const auto& arg : Split(text.substr(open + 1, text.size() - open - 2), ',')) {
    out += ":" + arg;
  }
  return out;
}

CostScheme ParseScheme(const std::string& raw) {
  const std::string text = Normalize(raw);
  const auto parts = Split(text, ':');
  if (parts.empty()) throw std::invalid_argument("empty cost scheme");
  const std::string& name = parts[0];
  auto arg = [&](size_t i) { return ParseNumber(parts.at(i), text); };
  auto expect = [&](size_t n) {
    if (parts.size() != n + 1) {
      throw std::invalid_argument("cost scheme '" + text + "' expects " +
                                  std::to_string(n) + " argument(s)");
    }
  };
  CostScheme s;
  if (name == "uniform_k") {
    expect(1);
    s = {CostScheme::Kind::kUniformK, arg(1), 0.0};
  } else if (name == "length") {
    expect(1);
    s = {CostScheme::Kind::kLength, arg(1), 0.0};
  } else if (name == "influence") {
    expect(2);
    s = {CostScheme::Kind::kInfluence, arg(1), arg(2)};
    if (!(s.a > 0.0 && s.b <= 1.0 && s.b >= 1.0 / (10.0 * s.a))) {
      throw std::invalid_argument("cost scheme '" + text +
                                  "' needs 1/(10k) <= cap <= 1");
    }
  } else if (name == "iid" || name == "iid_uniform" || name == "uniform") {
    expect(2);
    s = {CostScheme::Kind::kIidUniform, arg(1), arg(2)};
    if (!(s.a > 0.0 && s.a <= s.b && s.b <= 1.0)) {
      throw std::invalid_argument("cost scheme '" + text +
                                  "' needs 0 < lo <= hi <= 1");
    }
  } else if (name == "fixed") {
    expect(1);
    s = {CostScheme::Kind::kFixed, arg(1), 0.0};
  } else {
    throw std::invalid_argument("unknown cost scheme '" + name + "'");
  }
  if ((s.kind == CostScheme::Kind::kUniformK ||
       s.kind == CostScheme::Kind::kLength ||
       s.kind == CostScheme::Kind::kInfluence) &&
      !(s.a > 0.0)) {
    throw std::invalid_argument("cost scheme '" + text + "' needs k > 0");
  }
  return s;
}

}  // namespace

Rng::Rng(uint64_t seed) {
  uint64_t x = seed;
  for (auto& word : s_) word = SplitMix(x);
}

uint64_t Rng::Next() {
  const uint64_t result = Rotl(s_[1] * 5, 7) * 9;
  const uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = Rotl(s_[3], 45);
  return result;
}

double Rng::Uniform() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

uint64_t Rng::Below(uint64_t n) {
  if (n == 0) return 0;
  // Lemire's multiply-shift; the bias is irrelevant at these sizes.
  return static_cast<uint64_t>((static_cast<unsigned __int128>(Next()) * n) >> 64);
}

std::string CostScheme::Describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::kUniformK: out << "uniform_k:" << a; break;
    case Kind::kLength: out << "length:" << a; break;
    case Kind::kInfluence: out << "influence:" << a << ":" << b; break;
    case Kind::kIidUniform: out << "iid:" << a << ":" << b; break;
    case Kind::kFixed: out << "fixed:" << a; break;
  }
  return out.str();
}

void ContextAccumulator::Add(const Payload& payload) {
  if (const auto* bag = std::get_if<TokenBag>(&payload)) {
    total_length_ += bag->Length();
    total_followers_ += static_cast<double>(bag->followers);
    ++count_;
  } else if (const auto* items = std::get_if<ItemSet>(&payload)) {
    total_length_ += static_cast<double>(items->items.size());
    ++count_;
  }
}

CostContext ContextAccumulator::Finish() const {
  CostContext context;
  if (count_ > 0 && total_length_ > 0.0) {
    context.mean_length = total_length_ / static_cast<double>(count_);
    context.mean_followers = total_followers_ / static_cast<double>(count_);
  }
  return context;
}

CostModel CostModel::Parse(const std::string& text, int d) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  CostModel model;
  for (const auto& part : Split(text, '+')) model.schemes_.push_back(ParseScheme(part));
  if (model.schemes_.size() == 1) {
    model.schemes_.resize(static_cast<size_t>(d), model.schemes_.front());
  } else if (model.schemes_.size() != static_cast<size_t>(d)) {
    throw std::invalid_argument("cost model '" + text + "' has " +
                                std::to_string(model.schemes_.size()) +
                                " schemes for d=" + std::to_string(d));
  }
  return model;
}

std::vector<double> CostModel::Assign(const Payload& payload,
                                      const CostContext& context,
                                      Rng& rng) const {
  std::vector<double> costs;
  costs.reserve(schemes_.size());
  for (const auto& s : schemes_) costs.push_back(AssignCost(s, payload, context, rng));
  return costs;
}

double AssignCost(const CostScheme& scheme, const Payload& payload,
                  const CostContext& context, Rng& rng) {
  double cost = 0.0;
  switch (scheme.kind) {
    case CostScheme::Kind::kUniformK:
      cost = 1.0 / scheme.a;
      break;
    case CostScheme::Kind::kLength: {
      double length = 0.0;
      if (const auto* bag = std::get_if<TokenBag>(&payload)) {
        length = bag->Length();
      } else if (const auto* items = std::get_if<ItemSet>(&payload)) {
        length = static_cast<double>(items->items.size());
      } else {
        throw std::invalid_argument("cost scheme '" + scheme.Describe() +
                                    "' needs a token bag or item set");
      }
      cost = (1.0 / scheme.a) * length / context.mean_length;
      break;
    }
    case CostScheme::Kind::kInfluence: {
      const auto* bag = std::get_if<TokenBag>(&payload);
      if (bag == nullptr) {
        throw std::invalid_argument("cost scheme '" + scheme.Describe() +
                                    "' needs a token bag with followers");
      }
      const double cap = scheme.b;
      const double raw = cap * std::log1p(context.mean_followers) /
                         std::log(2.0 + static_cast<double>(bag->followers));
      cost = std::clamp(raw, 1.0 / (scheme.a * 10.0), cap);
      break;
    }
    case CostScheme::Kind::kIidUniform:
      cost = rng.Uniform(scheme.a, scheme.b);
      break;
    case CostScheme::Kind::kFixed:
      cost = scheme.a;
      break;
  }
  if (!(cost > 0.0 && cost <= 1.0)) {
    std::ostringstream msg;
    msg << "cost scheme '" << scheme.Describe() << "' produced cost " << cost
        << " outside (0, 1]";
    throw std::invalid_argument(msg.str());
  }
  return cost;
}

}  // namespace knapwin::harness
