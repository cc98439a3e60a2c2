//
// Copyright 2026 The ddprank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ddprank/mallows.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "ddprank/rng.hpp"

namespace ddprank {

void MallowsConfig::validate() const {
  if (m < 2) throw std::invalid_argument("mallows: m must be at least 2");
  if (n < 1) throw std::invalid_argument("mallows: n must be at least 1");
  if (!(theta >= 0.0) || !std::isfinite(theta)) {
    throw std::invalid_argument("mallows: theta must be finite and non-negative");
  }
  if (reference && reference->size() != m) {
    throw std::invalid_argument("mallows: reference ranking size differs from m");
  }
}

Ranking MallowsConfig::reference_or_identity() const {
  return reference ? *reference : Ranking::identity(m);
}

Profile sample_mallows(const MallowsConfig& cfg) {
  cfg.validate();
  const Ranking reference = cfg.reference_or_identity();

  // The i-th reference item (1-based) lands at slot j in 1..i with weight
  // exp(-theta * (i - j)); slot i keeps it below all earlier items.
  std::vector<std::discrete_distribution<int>> insertion;
  insertion.reserve(static_cast<std::size_t>(cfg.m));
  for (int i = 1; i <= cfg.m; ++i) {
    std::vector<double> weights(static_cast<std::size_t>(i));
    for (int j = 1; j <= i; ++j) weights[static_cast<std::size_t>(j - 1)] = std::exp(-cfg.theta * (i - j));
    insertion.emplace_back(weights.begin(), weights.end());
  }

  Rng rng(cfg.seed);
  Profile out;
  out.reserve(static_cast<std::size_t>(cfg.n));
  std::vector<Alternative> order;
  for (int u = 0; u < cfg.n; ++u) {
    order.clear();
    order.push_back(reference.at(0));
    for (int i = 2; i <= cfg.m; ++i) {
      const int slot = insertion[static_cast<std::size_t>(i - 1)](rng);
      order.insert(order.begin() + slot, reference.at(i - 1));
    }
    out.emplace_back(order);
  }
  return out;
}

}  // namespace ddprank
