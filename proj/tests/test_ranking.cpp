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

#include "doctest.h"
#include "ddprank/ranking.hpp"
#include "test_support.hpp"

namespace ddprank {
namespace {

using testing::cyclic_profile;
using testing::repeat;

TEST_CASE("ranking rejects non-permutations") {
  CHECK_THROWS_AS(Ranking({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Ranking({0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Ranking({0}), std::invalid_argument);
  CHECK_THROWS_AS(Ranking({-1, 0}), std::invalid_argument);
  CHECK_NOTHROW(Ranking({1, 0}));
}

TEST_CASE("pairwise_bit") {
  const Ranking r012({0, 1, 2});
  CHECK(pairwise_bit(r012, 0, 1) == 1);
  CHECK(pairwise_bit(r012, 2, 0) == 0);
  CHECK(pairwise_bit(Ranking({2, 0, 1}), 0, 1) == 1);
  CHECK_THROWS_AS(pairwise_bit(r012, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(pairwise_bit(r012, 0, 3), std::invalid_argument);
}

TEST_CASE("kendall distances") {
  const auto id4 = Ranking::identity(4);
  CHECK(kendall_raw(id4, id4) == 0);
  CHECK(kendall_raw(id4, Ranking({3, 2, 1, 0})) == 6);
  CHECK(kendall_raw(Ranking({0, 1, 2}), Ranking({1, 0, 2})) == 1);
  CHECK_THROWS_AS(kendall_raw(id4, Ranking::identity(3)), std::invalid_argument);

  CHECK(kendall_normalized(Ranking({0, 1, 2}), Ranking({1, 0, 2})) == doctest::Approx(1.0 / 3.0));
  CHECK(kendall_normalized(id4, id4.reversed()) == 1.0);
  CHECK(kendall_normalized(id4, id4) == 0.0);
}

TEST_CASE("average_kendall") {
  const Ranking r({0, 1, 2});
  CHECK(average_kendall(r, repeat({0, 1, 2}, 7)) == 0.0);
  CHECK(average_kendall(r, Profile{r, r.reversed()}) == doctest::Approx(0.5));
  const Profile p{Ranking({0, 1, 2}), Ranking({1, 0, 2}), Ranking({2, 1, 0})};
  CHECK(average_kendall(r, p) == doctest::Approx(4.0 / 9.0));
  CHECK_THROWS_AS(average_kendall(r, Profile{}), std::invalid_argument);
  CHECK_THROWS_AS(average_kendall(r, Profile{Ranking::identity(4)}), std::invalid_argument);
}

TEST_CASE("tally") {
  const auto unanimous = tally(repeat({0, 1, 2}, 5));
  CHECK(unanimous(0, 1) == 5);
  CHECK(unanimous(0, 2) == 5);
  CHECK(unanimous(1, 2) == 5);
  CHECK(unanimous(1, 0) == 0);
  CHECK(unanimous(2, 0) == 0);
  CHECK(unanimous(2, 1) == 0);

  const auto split = tally(Profile{Ranking({0, 1}), Ranking({1, 0})});
  CHECK(split(0, 1) == 1);
  CHECK(split(1, 0) == 1);

  const auto cyc = tally(cyclic_profile());
  CHECK(cyc(0, 1) == 30);
  CHECK(cyc(1, 0) == 20);
  CHECK(cyc(1, 2) == 30);
  CHECK(cyc(2, 1) == 20);
  CHECK(cyc(0, 2) == 10);
  CHECK(cyc(2, 0) == 40);
  CHECK(cyc.total() == 150);

  CHECK_THROWS_AS(tally(Profile{}), std::invalid_argument);
}

TEST_CASE("borda_scores") {
  CHECK(borda_scores(tally(repeat({0, 1, 2}, 5))) == std::vector<double>{10, 5, 0});
  CHECK(borda_scores(tally(cyclic_profile())) == std::vector<double>{40, 50, 60});
  CHECK(borda_scores(tally(Profile{Ranking({0, 1}), Ranking({1, 0})})) == std::vector<double>{1, 1});
  const std::vector<Alternative> subset{2, 0};
  CHECK(borda_scores(tally(cyclic_profile()), subset) == std::vector<double>{40, 10});
}

TEST_CASE("pairwise counts guard the diagonal") {
  PairwiseCounts c(3);
  CHECK_THROWS_AS(c.add(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(c.add(0, 3), std::invalid_argument);
}

// Both sides of the kernel threshold (m <= 16 packed, m > 16 scalar).
TEST_CASE("kendall and tally properties on random rankings") {
  Rng rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = rng.uniform_int(2, 24);
    const auto a = testing::random_ranking(m, rng);
    const auto b = testing::random_ranking(m, rng);
    const auto c = testing::random_ranking(m, rng);
    CAPTURE(m);
    CHECK(kendall_raw(a, b) == kendall_raw(b, a));
    CHECK(kendall_raw(a, c) <= kendall_raw(a, b) + kendall_raw(b, c));
    CHECK(kendall_raw(a, a.reversed()) == pair_count(m));
    CHECK(kendall_raw(a, b) == testing::brute_kendall(a.order(), b.order()));
    CHECK(Ranking::from_positions(a.positions()) == a);

    const int n = rng.uniform_int(1, 40);
    const auto profile = testing::random_profile(m, n, rng);
    CHECK(average_kendall(a, profile) == doctest::Approx(testing::brute_average_kendall(a.order(), profile)));
    const auto counts = tally(profile);
    const auto oracle = testing::brute_tally(profile);
    for (int i = 0; i < m; ++i) {
      CHECK(counts(i, i) == 0);
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        CHECK(counts(i, j) == oracle[i][j]);
        CHECK(counts(i, j) + counts(j, i) == static_cast<std::uint64_t>(n));
      }
    }
    CHECK(counts.total() == static_cast<std::uint64_t>(n) * pair_count(m));
  }
}

}  // namespace
}  // namespace ddprank
