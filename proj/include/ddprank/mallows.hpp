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

#ifndef DDPRANK_MALLOWS_HPP_
#define DDPRANK_MALLOWS_HPP_

#include <cstdint>
#include <optional>

#include "ddprank/ranking.hpp"

namespace ddprank {

// Mallows model P(r) proportional to exp(-theta * kendall_raw(r, reference)).
struct MallowsConfig {
  int m = 15;
  int n = 100;
  double theta = 0.25;
  std::optional<Ranking> reference;  // identity when unset
  std::uint64_t seed = 0;

  void validate() const;
  Ranking reference_or_identity() const;
};

// Repeated insertion sampler: exact, n independent draws, deterministic in
// the seed.
Profile sample_mallows(const MallowsConfig& cfg);

}  // namespace ddprank

#endif  // DDPRANK_MALLOWS_HPP_
