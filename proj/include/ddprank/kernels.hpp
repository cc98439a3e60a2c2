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

#ifndef DDPRANK_KERNELS_HPP_
#define DDPRANK_KERNELS_HPP_

// Profile-wide pairwise inner loops with a scalar reference implementation
// and vector variants (SSE2/AVX2 on x86-64, NEON on AArch64). The variant is
// chosen once at startup from CPU features and can be overridden through the
// DDPRANK_ISA environment variable or set_active_isa().
//
// Every variant must return bit-identical results to the scalar kernel.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ddprank/ranking.hpp"

namespace ddprank::kernels {

enum class Isa { kScalar, kSse2, kAvx2, kNeon };

std::string_view isa_name(Isa isa) noexcept;
// Parses "scalar", "sse2", "avx2" or "neon"; throws std::invalid_argument.
Isa parse_isa(std::string_view name);

// Variants compiled in and supported by this CPU, scalar first.
std::vector<Isa> available_isas();
Isa active_isa() noexcept;
// Throws std::invalid_argument if `isa` is not available.
void set_active_isa(Isa isa);

// Vector kernels hold one ranking's positions in a single 16-byte lane.
inline constexpr int kLaneWidth = 16;

// Position tables of a profile, one 16-byte row per ranking (bytes past m
// are zero padding).
struct PackedPositions {
  int m = 0;
  std::size_t rows = 0;
  std::vector<std::uint8_t> data;

  const std::uint8_t* row(std::size_t r) const { return data.data() + r * kLaneWidth; }
};

// Requires 2 <= m <= kLaneWidth for every ranking and a uniform m.
PackedPositions pack_positions(std::span<const Ranking> profile);
std::vector<std::uint8_t> pack_one(const Ranking& r);

// Sum over rows of the Kendall discord count between `reference` (a packed
// row) and each row.
std::uint64_t discord_total(std::span<const std::uint8_t> reference, const PackedPositions& rows);
std::uint64_t discord_total(Isa isa, std::span<const std::uint8_t> reference,
                            const PackedPositions& rows);

// counts[i * m + j] += number of rows where i precedes j.
void accumulate_precedence(const PackedPositions& rows, std::span<std::uint64_t> counts);
void accumulate_precedence(Isa isa, const PackedPositions& rows, std::span<std::uint64_t> counts);

}  // namespace ddprank::kernels

#endif  // DDPRANK_KERNELS_HPP_
