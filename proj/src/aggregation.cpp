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

#include "ddprank/aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ddprank/error.hpp"

namespace ddprank {
namespace {

std::vector<Alternative> all_alternatives(int m) {
  std::vector<Alternative> all(static_cast<std::size_t>(m));
  std::iota(all.begin(), all.end(), 0);
  return all;
}

// Members of `subset` whose tie-break score is maximal, in subset order.
std::vector<Alternative> tie_break_winners(const PairwiseCounts& counts,
                                           std::span<const Alternative> subset, TieBreak rule) {
  std::vector<double> scores;
  if (rule == TieBreak::kNetWin) {
    const auto net = net_win_scores(counts, subset);
    scores.assign(net.begin(), net.end());
  } else {
    scores = borda_scores(counts, subset);
  }
  const double best = *std::max_element(scores.begin(), scores.end());
  std::vector<Alternative> winners;
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (scores[k] == best) winners.push_back(subset[k]);
  }
  return winners;
}

void append_order(const PairwiseCounts& counts, std::span<const Alternative> subset, TieBreak rule,
                  AggregationTrace* trace, std::vector<Alternative>& out);

// A level on which PPR scores no longer separate anyone.
void split_stalled(const PairwiseCounts& counts, std::span<const Alternative> subset, TieBreak rule,
                   AggregationTrace* trace, std::vector<Alternative>& out) {
  auto winners = tie_break_winners(counts, subset, rule);
  if (winners.size() == subset.size()) {
    if (trace) ++trace->index_fallbacks;
    std::vector<Alternative> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    out.insert(out.end(), sorted.begin(), sorted.end());
    return;
  }
  if (trace) ++trace->score_splits;
  std::vector<Alternative> rest;
  for (Alternative a : subset) {
    if (std::find(winners.begin(), winners.end(), a) == winners.end()) rest.push_back(a);
  }
  append_order(counts, winners, rule, trace, out);
  append_order(counts, rest, rule, trace, out);
}

void append_order(const PairwiseCounts& counts, std::span<const Alternative> subset, TieBreak rule,
                  AggregationTrace* trace, std::vector<Alternative>& out) {
  if (subset.size() == 1) {
    out.push_back(subset.front());
    return;
  }
  const LevelAssignment levels = assign_levels(ppr_from_pcm(pcm_from_counts(counts, subset)));
  if (levels.groups.size() == 1) {
    split_stalled(counts, subset, rule, trace, out);
    return;
  }
  for (const auto& group : levels.groups) append_order(counts, group, rule, trace, out);
}

}  // namespace

SubsetMatrix::SubsetMatrix(std::vector<Alternative> alternatives, double fill)
    : alternatives_(std::move(alternatives)), v_(alternatives_.size() * alternatives_.size(), fill) {}

PreferenceMatrix pcm_from_counts(const PairwiseCounts& counts, std::span<const Alternative> subset) {
  if (subset.size() < 2) throw std::invalid_argument("pcm needs at least 2 alternatives");
  PreferenceMatrix pcm(std::vector<Alternative>(subset.begin(), subset.end()), 0.0);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = 0; j < subset.size(); ++j) {
      if (i == j) continue;
      const auto wins = counts(subset[i], subset[j]);
      const auto losses = counts(subset[j], subset[i]);
      const auto answered = wins + losses;
      pcm(i, j) = answered == 0 ? 0.5 : static_cast<double>(wins) / static_cast<double>(answered);
    }
  }
  return pcm;
}

RelationMatrix ppr_from_pcm(const PreferenceMatrix& pcm) {
  RelationMatrix ppr(pcm.alternatives(), 0.0);
  for (std::size_t i = 0; i < pcm.size(); ++i) {
    for (std::size_t j = 0; j < pcm.size(); ++j) {
      if (i == j) continue;
      const double v = pcm(i, j);
      ppr(i, j) = v > 0.5 ? 1.0 : (v < 0.5 ? 0.0 : 0.5);
    }
  }
  return ppr;
}

std::vector<double> level_scores(const RelationMatrix& ppr) {
  std::vector<double> scores(ppr.size(), 0.0);
  for (std::size_t i = 0; i < ppr.size(); ++i) {
    for (std::size_t j = 0; j < ppr.size(); ++j) {
      if (i != j) scores[i] += ppr(i, j);
    }
  }
  return scores;
}

LevelAssignment assign_levels(const RelationMatrix& ppr) {
  const auto scores = level_scores(ppr);
  std::vector<std::size_t> idx(scores.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

  LevelAssignment levels;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k == 0 || scores[idx[k]] != scores[idx[k - 1]]) levels.groups.emplace_back();
    levels.groups.back().push_back(ppr.alternatives()[idx[k]]);
  }
  return levels;
}

std::vector<std::int64_t> net_win_scores(const PairwiseCounts& counts, std::span<const Alternative> subset) {
  std::vector<std::int64_t> scores(subset.size(), 0);
  for (std::size_t j = 0; j < subset.size(); ++j) {
    for (Alternative i : subset) {
      if (i == subset[j]) continue;
      scores[j] += static_cast<std::int64_t>(counts(subset[j], i)) - static_cast<std::int64_t>(counts(i, subset[j]));
    }
  }
  return scores;
}

std::vector<Alternative> hierarchical_order(const PairwiseCounts& counts,
                                            std::span<const Alternative> subset, TieBreak tie_break,
                                            AggregationTrace* trace) {
  if (subset.empty()) throw std::invalid_argument("cannot aggregate an empty set");
  std::vector<Alternative> seen;
  for (Alternative a : subset) {
    if (a < 0 || a >= counts.size()) throw std::invalid_argument("alternative outside the count matrix");
    seen.push_back(a);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::invalid_argument("subset lists an alternative twice");
  }
  std::vector<Alternative> out;
  out.reserve(subset.size());
  append_order(counts, subset, tie_break, trace, out);
  return out;
}

Ranking hierarchical_aggregate(const PairwiseCounts& counts, TieBreak tie_break, AggregationTrace* trace) {
  const auto all = all_alternatives(counts.size());
  return Ranking(hierarchical_order(counts, all, tie_break, trace));
}

Ranking ra_aggregate(const PairwiseCounts& counts, AggregationTrace* trace) {
  return hierarchical_aggregate(counts, TieBreak::kNetWin, trace);
}

Ranking hra_aggregate(const PairwiseCounts& counts, AggregationTrace* trace) {
  return hierarchical_aggregate(counts, TieBreak::kBorda, trace);
}

Ranking borda_aggregate(const PairwiseCounts& counts) {
  const auto scores = borda_scores(counts);
  auto order = all_alternatives(counts.size());
  std::stable_sort(order.begin(), order.end(), [&](Alternative a, Alternative b) {
    return scores[static_cast<std::size_t>(a)] > scores[static_cast<std::size_t>(b)];
  });
  return Ranking(std::move(order));
}

KemenyResult kemeny_optimal(std::span<const Ranking> profile) {
  if (profile.empty()) throw std::invalid_argument("empty profile");
  const int m = profile.front().size();
  if (m > kKemenyMaxAlternatives) {
    throw UnsupportedSize("exhaustive Kemeny search limited to " +
                          std::to_string(kKemenyMaxAlternatives) + " alternatives, got " +
                          std::to_string(m));
  }
  // The summed distance of an order is the number of answers it contradicts,
  // so the search runs on the tally.
  const PairwiseCounts counts = tally(profile);
  auto order = all_alternatives(m);
  std::vector<Alternative> best = order;
  std::uint64_t best_cost = UINT64_MAX;
  do {
    std::uint64_t cost = 0;
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) cost += counts(order[static_cast<std::size_t>(b)], order[static_cast<std::size_t>(a)]);
    }
    if (cost < best_cost) {
      best_cost = cost;
      best = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));

  Ranking winner(std::move(best));
  const double value = average_kendall(winner, profile);
  return KemenyResult{std::move(winner), value};
}

}  // namespace ddprank
