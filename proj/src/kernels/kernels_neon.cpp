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

#include <arm_neon.h>

#include "kernels_impl.hpp"

namespace ddprank::kernels::detail::neon {
namespace {

uint8x16_t lane_mask(int m) {
  static const std::uint8_t kIota[kLaneWidth] = {0, 1, 2,  3,  4,  5,  6,  7,
                                                 8, 9, 10, 11, 12, 13, 14, 15};
  return vcltq_u8(vld1q_u8(kIota), vdupq_n_u8(static_cast<std::uint8_t>(m)));
}

}  // namespace

std::uint64_t discord_total(const std::uint8_t* reference, const PackedPositions& rows) {
  const int m = rows.m;
  const uint8x16_t mask = lane_mask(m);
  const uint8x16_t ref = vld1q_u8(reference);
  uint8x16_t ref_later[kLaneWidth];
  for (int i = 0; i < m; ++i) ref_later[i] = vcgtq_u8(ref, vdupq_n_u8(reference[i]));

  std::uint64_t total = 0;
  for (std::size_t r = 0; r < rows.rows; ++r) {
    const std::uint8_t* p = rows.row(r);
    const uint8x16_t row = vld1q_u8(p);
    uint8x16_t acc = vdupq_n_u8(0);
    for (int i = 0; i < m; ++i) {
      const uint8x16_t later = vcgtq_u8(row, vdupq_n_u8(p[i]));
      acc = vsubq_u8(acc, vandq_u8(veorq_u8(later, ref_later[i]), mask));
    }
    total += vaddlvq_u8(acc);
  }
  return total / 2;
}

void accumulate_precedence(const PackedPositions& rows, std::span<std::uint64_t> counts) {
  const int m = rows.m;
  uint8x16_t acc[kLaneWidth];
  for (auto& a : acc) a = vdupq_n_u8(0);
  std::uint8_t lanes[kLaneWidth];

  auto flush = [&] {
    for (int i = 0; i < m; ++i) {
      vst1q_u8(lanes, acc[i]);
      for (int j = 0; j < m; ++j) counts[static_cast<std::size_t>(i * m + j)] += lanes[j];
      acc[i] = vdupq_n_u8(0);
    }
  };

  std::size_t pending = 0;
  for (std::size_t r = 0; r < rows.rows; ++r) {
    const std::uint8_t* p = rows.row(r);
    const uint8x16_t row = vld1q_u8(p);
    for (int i = 0; i < m; ++i) acc[i] = vsubq_u8(acc[i], vcgtq_u8(row, vdupq_n_u8(p[i])));
    if (++pending == kFlushRows) {
      flush();
      pending = 0;
    }
  }
  flush();
}

}  // namespace ddprank::kernels::detail::neon
