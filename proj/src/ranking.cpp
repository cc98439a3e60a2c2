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

#include "ddprank/ranking.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ddprank/kernels.hpp"

namespace ddprank {
namespace {

void check_same_size(const Ranking& a, const Ranking& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("rankings over different alternative counts (" +
                                std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
  }
}

int uniform_size(std::span<const Ranking> profile) {
  if (profile.empty()) throw std::invalid_argument("empty profile");
  const int m = profile.front().size();
  for (const Ranking& r : profile) {
    if (r.size() != m) throw std::invalid_argument("profile mixes alternative counts");
  }
  return m;
}

}  // namespace

Ranking::Ranking(std::vector<Alternative> order) : order_(std::move(order)) {
  const auto m = order_.size();
  if (m < 2) throw std::invalid_argument("a ranking needs at least 2 alternatives");
  position_.assign(m, -1);
  for (std::size_t rank = 0; rank < m; ++rank) {
    const Alternative a = order_[rank];
    if (a < 0 || static_cast<std::size_t>(a) >= m) {
      throw std::invalid_argument("alternative index " + std::to_string(a) + " out of range");
    }
    if (position_[static_cast<std::size_t>(a)] != -1) {
      throw std::invalid_argument("alternative " + std::to_string(a) + " ranked twice");
    }
    position_[static_cast<std::size_t>(a)] = static_cast<int>(rank);
  }
}

Ranking Ranking::identity(int m) {
  std::vector<Alternative> order(static_cast<std::size_t>(std::max(m, 0)));
  std::iota(order.begin(), order.end(), 0);
  return Ranking(std::move(order));
}

Ranking Ranking::from_positions(std::span<const int> positions) {
  const auto m = positions.size();
  std::vector<Alternative> order(m, -1);
  for (std::size_t a = 0; a < m; ++a) {
    const int p = positions[a];
    if (p < 0 || static_cast<std::size_t>(p) >= m || order[static_cast<std::size_t>(p)] != -1) {
      throw std::invalid_argument("position vector is not a permutation");
    }
    order[static_cast<std::size_t>(p)] = static_cast<Alternative>(a);
  }
  return Ranking(std::move(order));
}

Ranking Ranking::reversed() const {
  return Ranking(std::vector<Alternative>(order_.rbegin(), order_.rend()));
}

PairwiseCounts::PairwiseCounts(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("count matrix needs at least one alternative");
  counts_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
}

std::size_t PairwiseCounts::index(Alternative i, Alternative j) const {
  if (i < 0 || j < 0 || i >= m_ || j >= m_) {
    throw std::invalid_argument("alternative index out of range");
  }
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(j);
}

void PairwiseCounts::add(Alternative winner, Alternative loser, std::uint64_t count) {
  if (winner == loser) throw std::invalid_argument("an alternative cannot beat itself");
  counts_[index(winner, loser)] += count;
}

std::uint64_t PairwiseCounts::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

int pairwise_bit(const Ranking& r, Alternative i, Alternative j) {
  if (i == j) throw std::invalid_argument("pairwise_bit needs two distinct alternatives");
  if (i < 0 || j < 0 || i >= r.size() || j >= r.size()) {
    throw std::invalid_argument("alternative index out of range");
  }
  return r.prefers(i, j) ? 1 : 0;
}

std::uint64_t kendall_raw(const Ranking& a, const Ranking& b) {
  check_same_size(a, b);
  const int m = a.size();
  std::uint64_t discordant = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      discordant += static_cast<std::uint64_t>(a.prefers(i, j) != b.prefers(i, j));
    }
  }
  return discordant;
}

double kendall_normalized(const Ranking& a, const Ranking& b) {
  const auto raw = kendall_raw(a, b);
  return static_cast<double>(raw) / static_cast<double>(pair_count(a.size()));
}

double average_kendall(const Ranking& r, std::span<const Ranking> profile) {
  const int m = uniform_size(profile);
  if (m != r.size()) throw std::invalid_argument("ranking and profile differ in size");

  std::uint64_t total = 0;
  if (m <= kernels::kLaneWidth) {
    total = kernels::discord_total(kernels::pack_one(r), kernels::pack_positions(profile));
  } else {
    for (const Ranking& p : profile) total += kendall_raw(r, p);
  }
  return static_cast<double>(total) /
         (static_cast<double>(profile.size()) * static_cast<double>(pair_count(m)));
}

PairwiseCounts tally(std::span<const Ranking> profile) {
  const int m = uniform_size(profile);
  PairwiseCounts counts(m);
  if (m <= kernels::kLaneWidth) {
    std::vector<std::uint64_t> buffer(static_cast<std::size_t>(m * m), 0);
    kernels::accumulate_precedence(kernels::pack_positions(profile), buffer);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i != j) counts.add(i, j, buffer[static_cast<std::size_t>(i * m + j)]);
      }
    }
    return counts;
  }
  for (const Ranking& p : profile) {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i != j && p.prefers(i, j)) counts.add(i, j);
      }
    }
  }
  return counts;
}

std::vector<double> borda_scores(const PairwiseCounts& counts, std::span<const Alternative> subset) {
  std::vector<double> scores(subset.size(), 0.0);
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (Alternative opponent : subset) {
      if (opponent != subset[a]) scores[a] += static_cast<double>(counts(subset[a], opponent));
    }
  }
  return scores;
}

std::vector<double> borda_scores(const PairwiseCounts& counts) {
  std::vector<Alternative> all(static_cast<std::size_t>(counts.size()));
  std::iota(all.begin(), all.end(), 0);
  return borda_scores(counts, all);
}

}  // namespace ddprank
