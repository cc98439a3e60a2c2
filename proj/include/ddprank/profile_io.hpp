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

#ifndef DDPRANK_PROFILE_IO_HPP_
#define DDPRANK_PROFILE_IO_HPP_

// Profile CSV: header `agent,r1,...,rm`, then one row per agent holding an
// agent id followed by the preference order (0-based, most preferred first).

#include <filesystem>
#include <iosfwd>

#include "ddprank/ranking.hpp"

namespace ddprank {

// Throws ParseError (with line number) on malformed input.
Profile read_profile(std::istream& in);
Profile load_profile(const std::filesystem::path& path);

// Agent ids are written as 0..n-1.
void write_profile(std::ostream& out, std::span<const Ranking> profile);
void save_profile(std::span<const Ranking> profile, const std::filesystem::path& path);

}  // namespace ddprank

#endif  // DDPRANK_PROFILE_IO_HPP_
