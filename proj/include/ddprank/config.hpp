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

#ifndef DDPRANK_CONFIG_HPP_
#define DDPRANK_CONFIG_HPP_

// Sweep files are flat key/value text:
//
//   # comment
//   [defaults]          values inherited by every later cell
//   delta = 1e-4
//   [fig2-ddp]          one sweep cell per section
//   method = ddp-helnaksort
//   k = 1               integer, `m`, or `max` (all pairs)
//
// Keys: method, m, n, theta, data_seed, profile, epsilon, epsilon_scope
// (central | local), delta, k, reps, seed. A relative `profile` path is
// resolved against the config file's directory.

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "ddprank/experiment.hpp"

namespace ddprank {

// Throws ConfigError naming the key.
void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value);

std::vector<ExperimentConfig> parse_config(std::istream& in,
                                           const std::filesystem::path& base_dir = {});
std::vector<ExperimentConfig> load_config(const std::filesystem::path& path);

}  // namespace ddprank

#endif  // DDPRANK_CONFIG_HPP_
