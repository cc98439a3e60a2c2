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

#ifndef DDPRANK_AGGREGATION_HPP_
#define DDPRANK_AGGREGATION_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "ddprank/ranking.hpp"

namespace ddprank {

// Square matrix over an ordered subset of alternatives; local index k refers
// to alternatives()[k].
class SubsetMatrix {
 public:
  SubsetMatrix(std::vector<Alternative> alternatives, double fill);

  std::size_t size() const noexcept { return alternatives_.size(); }
  const std::vector<Alternative>& alternatives() const noexcept { return alternatives_; }
  double operator()(std::size_t i, std::size_t j) const { return v_[i * size() + j]; }
  double& operator()(std::size_t i, std::size_t j) { return v_[i * size() + j]; }

 private:
  std::vector<Alternative> alternatives_;
  std::vector<double> v_;
};

// M(i, j) = C_ij / (C_ij + C_ji), 0.5 for pairs with no answers.
using PreferenceMatrix = SubsetMatrix;
// D(i, j) in {0, 0.5, 1}: majority relation read off the PCM.
using RelationMatrix = SubsetMatrix;

PreferenceMatrix pcm_from_counts(const PairwiseCounts& counts, std::span<const Alternative> subset);
RelationMatrix ppr_from_pcm(const PreferenceMatrix& pcm);

// L(i) = sum_j D(i, j); aligned with D.alternatives().
std::vector<double> level_scores(const RelationMatrix& ppr);

// Ordered partition of a subset, most preferred level first.
struct LevelAssignment {
  std::vector<std::vector<Alternative>> groups;
};

LevelAssignment assign_levels(const RelationMatrix& ppr);

// s(j) = sum over opponents i in the subset of (C_ji - C_ij); aligned with
// `subset`.
std::vector<std::int64_t> net_win_scores(const PairwiseCounts& counts, std::span<const Alternative> subset);

// Rule used to split a level whose members all tie on level score.
enum class TieBreak { kNetWin, kBorda };

// Counters for the fallback branches taken during one aggregation.
struct AggregationTrace {
  int score_splits = 0;     // net-win / Borda promoted a strict sub-group
  int index_fallbacks = 0;  // tie-break itself tied; ordered by index

  bool any_fallback() const noexcept { return score_splits + index_fallbacks > 0; }
};

// Hierarchical aggregation over `subset`: level by PPR wins, recurse into
// every level with more than one member, split non-shrinking levels with
// `tie_break`, and fall back to ascending index when that ties too. Accepts
// any non-empty subset, including a single alternative.
std::vector<Alternative> hierarchical_order(const PairwiseCounts& counts,
                                            std::span<const Alternative> subset, TieBreak tie_break,
                                            AggregationTrace* trace = nullptr);

// hierarchical_order over all alternatives; requires m >= 2.
Ranking hierarchical_aggregate(const PairwiseCounts& counts, TieBreak tie_break,
                               AggregationTrace* trace = nullptr);

// Net-win tie break (the privacy-preserving aggregator's final stage).
Ranking ra_aggregate(const PairwiseCounts& counts, AggregationTrace* trace = nullptr);
// Borda tie break (the original noiseless hierarchical aggregator).
Ranking hra_aggregate(const PairwiseCounts& counts, AggregationTrace* trace = nullptr);
// Plain Borda order, ties by ascending index.
Ranking borda_aggregate(const PairwiseCounts& counts);

struct KemenyResult {
  Ranking ranking;
  double average_distance;
};

inline constexpr int kKemenyMaxAlternatives = 8;

// Exhaustive minimizer of average_kendall; ties go to the lexicographically
// smallest order. Throws UnsupportedSize for m > kKemenyMaxAlternatives.
KemenyResult kemeny_optimal(std::span<const Ranking> profile);

}  // namespace ddprank

#endif  // DDPRANK_AGGREGATION_HPP_
