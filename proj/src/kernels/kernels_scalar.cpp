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

#include "kernels_impl.hpp"

namespace ddprank::kernels::detail::scalar {

std::uint64_t discord_total(const std::uint8_t* reference, const PackedPositions& rows) {
  const int m = rows.m;
  std::uint64_t total = 0;
  for (std::size_t r = 0; r < rows.rows; ++r) {
    const std::uint8_t* row = rows.row(r);
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        const bool ref_order = reference[i] < reference[j];
        const bool row_order = row[i] < row[j];
        total += static_cast<std::uint64_t>(ref_order != row_order);
      }
    }
  }
  return total;
}

void accumulate_precedence(const PackedPositions& rows, std::span<std::uint64_t> counts) {
  const int m = rows.m;
  for (std::size_t r = 0; r < rows.rows; ++r) {
    const std::uint8_t* row = rows.row(r);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        counts[static_cast<std::size_t>(i * m + j)] += static_cast<std::uint64_t>(row[i] < row[j]);
      }
    }
  }
}

}  // namespace ddprank::kernels::detail::scalar
