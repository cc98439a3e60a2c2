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

#ifndef DDPRANK_RANKING_HPP_
#define DDPRANK_RANKING_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace ddprank {

using Alternative = int;

// A strict total order over m >= 2 alternatives, stored most-preferred first.
// A position lookup table is kept alongside so pairwise queries are O(1).
class Ranking {
 public:
  // Throws std::invalid_argument unless `order` is a permutation of 0..m-1
  // with m >= 2.
  explicit Ranking(std::vector<Alternative> order);

  static Ranking identity(int m);

  // Builds a ranking from a rank-index vector: positions[a] is the 0-based
  // rank of alternative a.
  static Ranking from_positions(std::span<const int> positions);

  int size() const noexcept { return static_cast<int>(order_.size()); }
  const std::vector<Alternative>& order() const noexcept { return order_; }
  const std::vector<int>& positions() const noexcept { return position_; }

  Alternative at(int rank) const { return order_.at(static_cast<std::size_t>(rank)); }
  int position(Alternative a) const { return position_.at(static_cast<std::size_t>(a)); }
  bool prefers(Alternative a, Alternative b) const { return position(a) < position(b); }

  Ranking reversed() const;

  friend bool operator==(const Ranking&, const Ranking&) = default;

 private:
  std::vector<Alternative> order_;
  std::vector<int> position_;
};

using Profile = std::vector<Ranking>;

// counts(i, j) = number of collected answers asserting a_i over a_j.
class PairwiseCounts {
 public:
  explicit PairwiseCounts(int m);

  int size() const noexcept { return m_; }
  std::uint64_t operator()(Alternative i, Alternative j) const {
    return counts_[index(i, j)];
  }

  // Records `count` answers preferring `winner` over `loser`.
  void add(Alternative winner, Alternative loser, std::uint64_t count = 1);

  // Sum over all ordered pairs; equals the number of binary answers ingested.
  std::uint64_t total() const noexcept;

  std::span<const std::uint64_t> raw() const noexcept { return counts_; }

  friend bool operator==(const PairwiseCounts&, const PairwiseCounts&) = default;

 private:
  std::size_t index(Alternative i, Alternative j) const;

  int m_;
  std::vector<std::uint64_t> counts_;
};

constexpr std::uint64_t pair_count(int m) noexcept {
  return static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(m - 1) / 2;
}

// 1 iff i precedes j in r.
int pairwise_bit(const Ranking& r, Alternative i, Alternative j);

// Number of unordered pairs ordered differently by a and b.
std::uint64_t kendall_raw(const Ranking& a, const Ranking& b);
double kendall_normalized(const Ranking& a, const Ranking& b);

// Mean normalized Kendall distance from r to each ranking in the profile.
double average_kendall(const Ranking& r, std::span<const Ranking> profile);

// Full-information pairwise tally of a profile.
PairwiseCounts tally(std::span<const Ranking> profile);

// Total pairwise wins per alternative; with `subset`, wins are counted only
// against opponents in the subset and the result is aligned with it.
std::vector<double> borda_scores(const PairwiseCounts& counts);
std::vector<double> borda_scores(const PairwiseCounts& counts, std::span<const Alternative> subset);

}  // namespace ddprank

#endif  // DDPRANK_RANKING_HPP_
