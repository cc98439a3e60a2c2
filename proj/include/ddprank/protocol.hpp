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

#ifndef DDPRANK_PROTOCOL_HPP_
#define DDPRANK_PROTOCOL_HPP_

// Simulated three-party pipeline: the curator assigns pair queries, each
// agent answers with locally randomized bits, a trusted shuffler strips
// identities and permutes each pair's answers, and the curator tallies.

#include <algorithm>
#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ddprank/privacy.hpp"
#include "ddprank/ranking.hpp"
#include "ddprank/rng.hpp"

namespace ddprank {

// Unordered pair stored canonically with first < second.
struct PairQuery {
  Alternative first = 0;
  Alternative second = 1;

  // Throws std::invalid_argument if a == b or either is negative.
  static PairQuery canonical(Alternative a, Alternative b);

  friend auto operator<=>(const PairQuery&, const PairQuery&) = default;
};

// Inverse of the row-major enumeration (0,1), (0,2), ..., (m-2, m-1).
PairQuery pair_from_index(std::size_t index, int m);

// bit = 1 means pair.first is preferred over pair.second.
struct NoisyAnswer {
  PairQuery pair;
  int bit = 0;
  std::optional<int> agent_id;
};

using QueryAssignment = std::vector<std::vector<PairQuery>>;

// What the shuffler forwards: per-pair bit sequences with no identities.
class ShuffledBatch {
 public:
  using Groups = std::map<PairQuery, std::vector<std::uint8_t>>;

  ShuffledBatch() = default;
  explicit ShuffledBatch(Groups groups) : groups_(std::move(groups)) {}

  const Groups& groups() const noexcept { return groups_; }
  std::size_t answer_count() const noexcept;

 private:
  Groups groups_;
};

// Each agent gets k distinct pairs drawn uniformly without replacement.
QueryAssignment assign_queries(int n, int m, int k, Rng& rng);

// One answer per (agent, assigned pair), in agent order. Agent u draws its
// noise from a sub-stream seeded by (one draw of `rng`, u), so the output
// does not depend on how agents are scheduled.
std::vector<NoisyAnswer> collect(std::span<const Ranking> profile, const QueryAssignment& assignments,
                                 const PrivacySpec& spec, Rng& rng);

// Uniform random permutation of one pair's group.
template <typename T>
void permute_group(std::span<T> items, Rng& rng) {
  std::shuffle(items.begin(), items.end(), rng);
}

// Groups by pair, applies a uniform permutation per group, drops agent ids.
ShuffledBatch shuffle(std::span<const NoisyAnswer> answers, Rng& rng);

// Groups by pair in arrival order, no permutation (the unshuffled channel).
ShuffledBatch group_by_pair(std::span<const NoisyAnswer> answers);

PairwiseCounts tally_batch(const ShuffledBatch& batch, int m);

// Debug dump `pair_i,pair_j,bit`, one line per answer, no agent column.
void write_answer_dump(std::ostream& out, const ShuffledBatch& batch);

}  // namespace ddprank

#endif  // DDPRANK_PROTOCOL_HPP_
