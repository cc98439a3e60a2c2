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

#include "ddprank/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ddprank/protocol.hpp"

namespace ddprank {
namespace {

Alternative random_pivot(std::span<const Alternative> items, Rng& rng) {
  return items[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(items.size()) - 1))];
}

// Generic randomized quicksort where `before(a, p)` decides a's side.
template <typename Before>
void quicksort_into(std::vector<Alternative> items, Rng& rng, const PivotRule& pivot_rule,
                    Before& before, std::vector<Alternative>& out) {
  if (items.empty()) return;
  if (items.size() == 1) {
    out.push_back(items.front());
    return;
  }
  const Alternative pivot = pivot_rule ? pivot_rule(items, rng) : random_pivot(items, rng);
  if (std::find(items.begin(), items.end(), pivot) == items.end()) {
    throw std::logic_error("pivot rule returned an alternative outside the sub-list");
  }
  std::vector<Alternative> left;
  std::vector<Alternative> right;
  for (Alternative a : items) {
    if (a == pivot) continue;
    (before(a, pivot) ? left : right).push_back(a);
  }
  quicksort_into(std::move(left), rng, pivot_rule, before, out);
  out.push_back(pivot);
  quicksort_into(std::move(right), rng, pivot_rule, before, out);
}

std::vector<Alternative> all_alternatives(int m) {
  std::vector<Alternative> all(static_cast<std::size_t>(m));
  std::iota(all.begin(), all.end(), 0);
  return all;
}

}  // namespace

BudgetLedger::BudgetLedger(int agents, int per_agent)
    : per_agent_(per_agent), remaining_(static_cast<std::size_t>(std::max(agents, 0)), per_agent) {
  if (agents < 0 || per_agent < 0) throw std::invalid_argument("ledger sizes must be non-negative");
  if (per_agent > 0) {
    available_.resize(remaining_.size());
    std::iota(available_.begin(), available_.end(), 0);
  }
}

std::vector<int> BudgetLedger::draw(std::size_t count, Rng& rng) {
  count = std::min(count, available_.size());
  // Partial Fisher-Yates over the pool of agents with budget left.
  for (std::size_t s = 0; s < count; ++s) {
    const auto pick = static_cast<std::size_t>(
        rng.uniform_int(static_cast<int>(s), static_cast<int>(available_.size()) - 1));
    std::swap(available_[s], available_[pick]);
  }
  std::vector<int> chosen(available_.begin(), available_.begin() + static_cast<std::ptrdiff_t>(count));
  for (int agent : chosen) --remaining_[static_cast<std::size_t>(agent)];
  std::erase_if(available_, [&](int agent) { return remaining_[static_cast<std::size_t>(agent)] == 0; });
  return chosen;
}

Ranking kwiksort(const PairwiseCounts& counts, Rng& rng, const PivotRule& pivot) {
  auto before = [&](Alternative a, Alternative p) {
    const auto ap = counts(a, p);
    const auto pa = counts(p, a);
    if (ap != pa) return ap > pa;
    return rng.coin();
  };
  std::vector<Alternative> out;
  quicksort_into(all_alternatives(counts.size()), rng, pivot, before, out);
  return Ranking(std::move(out));
}

Ranking ldp_kwiksort(std::span<const Ranking> profile, const PrivacySpec& spec, Rng& rng) {
  if (profile.empty()) throw std::invalid_argument("empty profile");
  spec.validate();
  const int m = profile.front().size();
  const auto assignments = assign_queries(static_cast<int>(profile.size()), m, spec.k_queries, rng);
  const auto answers = collect(profile, assignments, spec, rng);
  return kwiksort(tally_batch(group_by_pair(answers), m), rng);
}

Ranking ldp_quicksort(std::span<const Ranking> profile, const PrivacySpec& spec, Rng& rng) {
  if (profile.empty()) throw std::invalid_argument("empty profile");
  const double sigma = gaussian_sigma(spec);
  const int m = profile.front().size();
  for (const Ranking& r : profile) {
    if (r.size() != m) throw std::invalid_argument("profile mixes alternative counts");
  }
  const auto n = static_cast<std::uint64_t>(profile.size());
  const auto supply = n * static_cast<std::uint64_t>(spec.k_queries);
  const auto pairs = pair_count(m);
  const auto cap = static_cast<std::size_t>((supply + pairs - 1) / pairs);

  BudgetLedger ledger(static_cast<int>(profile.size()), spec.k_queries);
  Rng noise(derive_seed(rng(), 0));
  auto before = [&](Alternative a, Alternative p) {
    long long margin = 0;
    for (int agent : ledger.draw(cap, rng)) {
      const int truth = pairwise_bit(profile[static_cast<std::size_t>(agent)], a, p);
      margin += randomize_bit(truth, sigma, noise) ? 1 : -1;
    }
    if (margin != 0) return margin > 0;
    return rng.coin();
  };
  std::vector<Alternative> out;
  quicksort_into(all_alternatives(m), rng, {}, before, out);
  return Ranking(std::move(out));
}

}  // namespace ddprank
