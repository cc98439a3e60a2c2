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

#include "ddprank/protocol.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ddprank {

PairQuery PairQuery::canonical(Alternative a, Alternative b) {
  if (a == b) throw std::invalid_argument("a pair needs two distinct alternatives");
  if (a < 0 || b < 0) throw std::invalid_argument("negative alternative index");
  return a < b ? PairQuery{a, b} : PairQuery{b, a};
}

PairQuery pair_from_index(std::size_t index, int m) {
  if (index >= pair_count(m)) throw std::invalid_argument("pair index out of range");
  for (int i = 0; i < m - 1; ++i) {
    const auto row = static_cast<std::size_t>(m - 1 - i);
    if (index < row) return PairQuery{i, i + 1 + static_cast<int>(index)};
    index -= row;
  }
  throw std::logic_error("unreachable");
}

std::size_t ShuffledBatch::answer_count() const noexcept {
  std::size_t total = 0;
  for (const auto& [pair, bits] : groups_) total += bits.size();
  return total;
}

QueryAssignment assign_queries(int n, int m, int k, Rng& rng) {
  if (n < 0) throw std::invalid_argument("agent count must be non-negative");
  if (m < 2) throw std::invalid_argument("need at least 2 alternatives");
  const auto pairs = pair_count(m);
  if (k < 1 || static_cast<std::uint64_t>(k) > pairs) {
    throw std::invalid_argument("k must lie in [1, " + std::to_string(pairs) + "]");
  }

  QueryAssignment out(static_cast<std::size_t>(n));
  std::vector<std::size_t> pool(pairs);
  for (auto& queries : out) {
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    // Partial Fisher-Yates: the first k slots are a uniform k-subset.
    for (int s = 0; s < k; ++s) {
      const auto pick = static_cast<std::size_t>(rng.uniform_int(s, static_cast<int>(pairs) - 1));
      std::swap(pool[static_cast<std::size_t>(s)], pool[pick]);
    }
    queries.reserve(static_cast<std::size_t>(k));
    for (int s = 0; s < k; ++s) queries.push_back(pair_from_index(pool[static_cast<std::size_t>(s)], m));
  }
  return out;
}

std::vector<NoisyAnswer> collect(std::span<const Ranking> profile, const QueryAssignment& assignments,
                                 const PrivacySpec& spec, Rng& rng) {
  if (assignments.size() != profile.size()) {
    throw std::invalid_argument("assignment count differs from profile size");
  }
  const double sigma = gaussian_sigma(spec);
  const std::uint64_t master = rng();

  std::vector<NoisyAnswer> answers;
  for (std::size_t u = 0; u < profile.size(); ++u) {
    Rng agent_rng(derive_seed(master, u));
    const Ranking& ranking = profile[u];
    for (const PairQuery& q : assignments[u]) {
      if (q.first >= q.second || q.second >= ranking.size()) {
        throw std::invalid_argument("assigned pair outside the agent's ranking");
      }
      const int truth = pairwise_bit(ranking, q.first, q.second);
      answers.push_back(NoisyAnswer{q, randomize_bit(truth, sigma, agent_rng), static_cast<int>(u)});
    }
  }
  return answers;
}

ShuffledBatch group_by_pair(std::span<const NoisyAnswer> answers) {
  ShuffledBatch::Groups groups;
  for (const NoisyAnswer& a : answers) {
    if (a.bit != 0 && a.bit != 1) throw std::invalid_argument("answer bit must be 0 or 1");
    groups[PairQuery::canonical(a.pair.first, a.pair.second)].push_back(
        static_cast<std::uint8_t>(a.pair.first < a.pair.second ? a.bit : 1 - a.bit));
  }
  return ShuffledBatch(std::move(groups));
}

ShuffledBatch shuffle(std::span<const NoisyAnswer> answers, Rng& rng) {
  ShuffledBatch::Groups groups = group_by_pair(answers).groups();
  for (auto& [pair, bits] : groups) permute_group(std::span(bits), rng);
  return ShuffledBatch(std::move(groups));
}

PairwiseCounts tally_batch(const ShuffledBatch& batch, int m) {
  PairwiseCounts counts(m);
  for (const auto& [pair, bits] : batch.groups()) {
    if (pair.second >= m) {
      throw std::invalid_argument("pair (" + std::to_string(pair.first) + "," +
                                  std::to_string(pair.second) + ") outside " + std::to_string(m) +
                                  " alternatives");
    }
    const auto ones = static_cast<std::uint64_t>(std::count(bits.begin(), bits.end(), 1));
    const auto zeros = bits.size() - ones;
    if (ones) counts.add(pair.first, pair.second, ones);
    if (zeros) counts.add(pair.second, pair.first, zeros);
  }
  return counts;
}

void write_answer_dump(std::ostream& out, const ShuffledBatch& batch) {
  out << "pair_i,pair_j,bit\n";
  for (const auto& [pair, bits] : batch.groups()) {
    for (auto bit : bits) out << pair.first << ',' << pair.second << ',' << int{bit} << '\n';
  }
}

}  // namespace ddprank
