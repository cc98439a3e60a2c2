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

#ifndef DDPRANK_SRC_KERNELS_KERNELS_IMPL_HPP_
#define DDPRANK_SRC_KERNELS_KERNELS_IMPL_HPP_

#include <cstdint>
#include <span>

#include "ddprank/kernels.hpp"

namespace ddprank::kernels::detail {

#define DDPRANK_DECLARE_KERNELS(ns)                                                    \
  namespace ns {                                                                       \
  std::uint64_t discord_total(const std::uint8_t* reference, const PackedPositions& rows); \
  void accumulate_precedence(const PackedPositions& rows, std::span<std::uint64_t> counts); \
  }

DDPRANK_DECLARE_KERNELS(scalar)
#if defined(DDPRANK_HAVE_X86)
DDPRANK_DECLARE_KERNELS(sse2)
DDPRANK_DECLARE_KERNELS(avx2)
#endif
#if defined(DDPRANK_HAVE_NEON)
DDPRANK_DECLARE_KERNELS(neon)
#endif

#undef DDPRANK_DECLARE_KERNELS

// Byte accumulators saturate at 255; flush before that.
inline constexpr std::size_t kFlushRows = 255;

}  // namespace ddprank::kernels::detail

#endif  // DDPRANK_SRC_KERNELS_KERNELS_IMPL_HPP_
