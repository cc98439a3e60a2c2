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

#ifndef DDPRANK_BASELINES_HPP_
#define DDPRANK_BASELINES_HPP_

// Quicksort-style comparison aggregators under the same local Gaussian
// randomizer: LDP-Kwiksort collects all answers up front, LDP-Quicksort asks
// only for the comparisons each pivot needs.

#include <functional>
#include <span>
#include <vector>

#include "ddprank/privacy.hpp"
#include "ddprank/ranking.hpp"
#include "ddprank/rng.hpp"

namespace ddprank {

// Remaining answer allowance per agent.
class BudgetLedger {
 public:
  BudgetLedger(int agents, int per_agent);

  int remaining(int agent) const { return remaining_.at(static_cast<std::size_t>(agent)); }
  int per_agent() const noexcept { return per_agent_; }
  std::size_t agents_with_budget() const noexcept { return available_.size(); }

  // Draws up to `count` distinct agents uniformly from those with budget
  // left and charges each one answer.
  std::vector<int> draw(std::size_t count, Rng& rng);

 private:
  int per_agent_;
  std::vector<int> remaining_;
  std::vector<int> available_;
};

// Chooses a pivot from the current (non-empty) sub-list.
using PivotRule = std::function<Alternative(std::span<const Alternative>, Rng&)>;

// Uniformly random pivots. a goes before pivot p iff counts(a, p) >
// counts(p, a); equal counts (including no data) are settled by a fair coin.
Ranking kwiksort(const PairwiseCounts& counts, Rng& rng, const PivotRule& pivot = {});

Ranking ldp_kwiksort(std::span<const Ranking> profile, const PrivacySpec& spec, Rng& rng);

// Answers per comparison are capped at ceil(n K / C(m, 2)).
Ranking ldp_quicksort(std::span<const Ranking> profile, const PrivacySpec& spec, Rng& rng);

}  // namespace ddprank

#endif  // DDPRANK_BASELINES_HPP_
