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

#include <emmintrin.h>

#include "kernels_impl.hpp"

namespace ddprank::kernels::detail::sse2 {
namespace {

__m128i lane_mask(int m) {
  const __m128i iota = _mm_setr_epi8(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15);
  return _mm_cmplt_epi8(iota, _mm_set1_epi8(static_cast<char>(m)));
}

__m128i load_row(const std::uint8_t* p) {
  return _mm_loadu_si128(reinterpret_cast<const __m128i*>(p));
}

}  // namespace

// Positions are < 16, so signed byte compares are exact. Each i contributes
// the discordant lanes j != i; every unordered pair is therefore seen twice.
std::uint64_t discord_total(const std::uint8_t* reference, const PackedPositions& rows) {
  const int m = rows.m;
  const __m128i mask = lane_mask(m);
  const __m128i ref = load_row(reference);
  __m128i ref_later[kLaneWidth] = {};
  for (int i = 0; i < m; ++i) {
    ref_later[i] = _mm_cmpgt_epi8(ref, _mm_set1_epi8(static_cast<char>(reference[i])));
  }

  __m128i sums = _mm_setzero_si128();
  for (std::size_t r = 0; r < rows.rows; ++r) {
    const std::uint8_t* p = rows.row(r);
    const __m128i row = load_row(p);
    __m128i acc = _mm_setzero_si128();
    for (int i = 0; i < m; ++i) {
      const __m128i later = _mm_cmpgt_epi8(row, _mm_set1_epi8(static_cast<char>(p[i])));
      acc = _mm_sub_epi8(acc, _mm_and_si128(_mm_xor_si128(later, ref_later[i]), mask));
    }
    sums = _mm_add_epi64(sums, _mm_sad_epu8(acc, _mm_setzero_si128()));
  }
  alignas(16) std::uint64_t out[2];
  _mm_store_si128(reinterpret_cast<__m128i*>(out), sums);
  return (out[0] + out[1]) / 2;
}

void accumulate_precedence(const PackedPositions& rows, std::span<std::uint64_t> counts) {
  const int m = rows.m;
  __m128i acc[kLaneWidth] = {};
  alignas(16) std::uint8_t lanes[kLaneWidth];

  auto flush = [&] {
    for (int i = 0; i < m; ++i) {
      _mm_store_si128(reinterpret_cast<__m128i*>(lanes), acc[i]);
      for (int j = 0; j < m; ++j) counts[static_cast<std::size_t>(i * m + j)] += lanes[j];
      acc[i] = _mm_setzero_si128();
    }
  };

  std::size_t pending = 0;
  for (std::size_t r = 0; r < rows.rows; ++r) {
    const std::uint8_t* p = rows.row(r);
    const __m128i row = load_row(p);
    for (int i = 0; i < m; ++i) {
      acc[i] = _mm_sub_epi8(acc[i], _mm_cmpgt_epi8(row, _mm_set1_epi8(static_cast<char>(p[i]))));
    }
    if (++pending == kFlushRows) {
      flush();
      pending = 0;
    }
  }
  flush();
}

}  // namespace ddprank::kernels::detail::sse2
