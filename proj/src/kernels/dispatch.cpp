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

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_impl.hpp"

namespace ddprank::kernels {
namespace {

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
#if defined(DDPRANK_HAVE_X86)
    case Isa::kSse2:
      return true;
    case Isa::kAvx2:
      return __builtin_cpu_supports("avx2");
#endif
#if defined(DDPRANK_HAVE_NEON)
    case Isa::kNeon:
      return true;
#endif
    default:
      return false;
  }
}

Isa initial_isa() {
  const Isa best = available_isas().back();
  const char* forced = std::getenv("DDPRANK_ISA");
  if (forced == nullptr || *forced == '\0') return best;
  try {
    const Isa isa = parse_isa(forced);
    if (cpu_supports(isa)) return isa;
  } catch (const std::invalid_argument&) {
  }
  std::fprintf(stderr, "ddprank: DDPRANK_ISA=%s unavailable, using %s\n", forced,
               std::string(isa_name(best)).c_str());
  return best;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

void check_rows(const PackedPositions& rows) {
  if (rows.m < 2 || rows.m > kLaneWidth || rows.data.size() != rows.rows * kLaneWidth) {
    throw std::invalid_argument("malformed packed positions");
  }
}

void require_available(Isa isa) {
  if (!cpu_supports(isa)) {
    throw std::invalid_argument("ISA " + std::string(isa_name(isa)) + " is not available");
  }
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kSse2: return "sse2";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

Isa parse_isa(std::string_view name) {
  for (Isa isa : {Isa::kScalar, Isa::kSse2, Isa::kAvx2, Isa::kNeon}) {
    if (isa_name(isa) == name) return isa;
  }
  throw std::invalid_argument("unknown ISA '" + std::string(name) + "'");
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::kScalar, Isa::kSse2, Isa::kNeon, Isa::kAvx2}) {
    if (cpu_supports(isa)) out.push_back(isa);
  }
  return out;
}

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  require_available(isa);
  active().store(isa, std::memory_order_relaxed);
}

std::vector<std::uint8_t> pack_one(const Ranking& r) {
  if (r.size() > kLaneWidth) throw std::invalid_argument("ranking too wide for packed kernels");
  std::vector<std::uint8_t> row(kLaneWidth, 0);
  for (int a = 0; a < r.size(); ++a) row[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(r.position(a));
  return row;
}

PackedPositions pack_positions(std::span<const Ranking> profile) {
  PackedPositions out;
  if (profile.empty()) throw std::invalid_argument("empty profile");
  out.m = profile.front().size();
  if (out.m > kLaneWidth) throw std::invalid_argument("ranking too wide for packed kernels");
  out.rows = profile.size();
  out.data.assign(out.rows * kLaneWidth, 0);
  for (std::size_t r = 0; r < profile.size(); ++r) {
    if (profile[r].size() != out.m) throw std::invalid_argument("rankings differ in size");
    const auto& pos = profile[r].positions();
    std::transform(pos.begin(), pos.end(), out.data.begin() + static_cast<std::ptrdiff_t>(r * kLaneWidth),
                   [](int p) { return static_cast<std::uint8_t>(p); });
  }
  return out;
}

std::uint64_t discord_total(Isa isa, std::span<const std::uint8_t> reference,
                            const PackedPositions& rows) {
  check_rows(rows);
  require_available(isa);
  if (reference.size() != kLaneWidth) throw std::invalid_argument("reference must be one packed row");
  switch (isa) {
#if defined(DDPRANK_HAVE_X86)
    case Isa::kSse2: return detail::sse2::discord_total(reference.data(), rows);
    case Isa::kAvx2: return detail::avx2::discord_total(reference.data(), rows);
#endif
#if defined(DDPRANK_HAVE_NEON)
    case Isa::kNeon: return detail::neon::discord_total(reference.data(), rows);
#endif
    default: return detail::scalar::discord_total(reference.data(), rows);
  }
}

std::uint64_t discord_total(std::span<const std::uint8_t> reference, const PackedPositions& rows) {
  return discord_total(active_isa(), reference, rows);
}

void accumulate_precedence(Isa isa, const PackedPositions& rows, std::span<std::uint64_t> counts) {
  check_rows(rows);
  require_available(isa);
  if (counts.size() != static_cast<std::size_t>(rows.m * rows.m)) {
    throw std::invalid_argument("count buffer must be m*m");
  }
  switch (isa) {
#if defined(DDPRANK_HAVE_X86)
    case Isa::kSse2: return detail::sse2::accumulate_precedence(rows, counts);
    case Isa::kAvx2: return detail::avx2::accumulate_precedence(rows, counts);
#endif
#if defined(DDPRANK_HAVE_NEON)
    case Isa::kNeon: return detail::neon::accumulate_precedence(rows, counts);
#endif
    default: return detail::scalar::accumulate_precedence(rows, counts);
  }
}

void accumulate_precedence(const PackedPositions& rows, std::span<std::uint64_t> counts) {
  accumulate_precedence(active_isa(), rows, counts);
}

}  // namespace ddprank::kernels
