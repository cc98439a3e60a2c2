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

// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace ddprank::kernels::detail::avx2 {
namespace {

__m256i lane_mask(int m) {
  const __m128i iota = _mm_setr_epi8(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15);
  const __m128i half = _mm_cmplt_epi8(iota, _mm_set1_epi8(static_cast<char>(m)));
  return _mm256_broadcastsi128_si256(half);
}

// Two consecutive 16-byte rows, one per 128-bit lane.
__m256i load_pair(const std::uint8_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

// Broadcasts byte i of each 128-bit lane across that lane.
__m256i splat_lane_byte(__m256i v, int i) {
  return _mm256_shuffle_epi8(v, _mm256_set1_epi8(static_cast<char>(i)));
}

std::uint64_t hsum64(__m256i v) {
  alignas(32) std::uint64_t out[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(out), v);
  return out[0] + out[1] + out[2] + out[3];
}

}  // namespace

std::uint64_t discord_total(const std::uint8_t* reference, const PackedPositions& rows) {
  const int m = rows.m;
  const __m256i mask = lane_mask(m);
  const __m256i ref =
      _mm256_broadcastsi128_si256(_mm_loadu_si128(reinterpret_cast<const __m128i*>(reference)));
  __m256i ref_later[kLaneWidth] = {};
  for (int i = 0; i < m; ++i) ref_later[i] = _mm256_cmpgt_epi8(ref, splat_lane_byte(ref, i));

  __m256i sums = _mm256_setzero_si256();
  std::size_t r = 0;
  for (; r + 2 <= rows.rows; r += 2) {
    const __m256i row = load_pair(rows.row(r));
    __m256i acc = _mm256_setzero_si256();
    for (int i = 0; i < m; ++i) {
      const __m256i later = _mm256_cmpgt_epi8(row, splat_lane_byte(row, i));
      acc = _mm256_sub_epi8(acc, _mm256_and_si256(_mm256_xor_si256(later, ref_later[i]), mask));
    }
    sums = _mm256_add_epi64(sums, _mm256_sad_epu8(acc, _mm256_setzero_si256()));
  }
  std::uint64_t total = hsum64(sums) / 2;
  if (r < rows.rows) {
    PackedPositions tail{m, 1, {rows.row(r), rows.row(r) + kLaneWidth}};
    total += scalar::discord_total(reference, tail);
  }
  return total;
}

void accumulate_precedence(const PackedPositions& rows, std::span<std::uint64_t> counts) {
  const int m = rows.m;
  __m256i acc[kLaneWidth] = {};
  alignas(32) std::uint8_t lanes[2 * kLaneWidth];

  auto flush = [&] {
    for (int i = 0; i < m; ++i) {
      _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc[i]);
      for (int j = 0; j < m; ++j) {
        counts[static_cast<std::size_t>(i * m + j)] += lanes[j] + lanes[kLaneWidth + j];
      }
      acc[i] = _mm256_setzero_si256();
    }
  };

  std::size_t pending = 0;
  std::size_t r = 0;
  for (; r + 2 <= rows.rows; r += 2) {
    const __m256i row = load_pair(rows.row(r));
    for (int i = 0; i < m; ++i) {
      acc[i] = _mm256_sub_epi8(acc[i], _mm256_cmpgt_epi8(row, splat_lane_byte(row, i)));
    }
    if (++pending == kFlushRows) {
      flush();
      pending = 0;
    }
  }
  flush();
  if (r < rows.rows) {
    PackedPositions tail{m, 1, {rows.row(r), rows.row(r) + kLaneWidth}};
    scalar::accumulate_precedence(tail, counts);
  }
}

}  // namespace ddprank::kernels::detail::avx2
