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

#include "ddprank/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <string>

#include "ddprank/error.hpp"

namespace ddprank {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size() || value.empty()) {
    throw ConfigError(std::string(key), "cannot parse '" + std::string(value) + "'");
  }
  return out;
}

int parse_int(std::string_view key, std::string_view value) {
  return parse_number<int>(key, value);
}

}  // namespace

void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "method") {
    cfg.method = parse_method(value);
  } else if (key == "m") {
    cfg.m = parse_int(key, value);
  } else if (key == "n") {
    cfg.n = parse_int(key, value);
  } else if (key == "theta") {
    cfg.theta = parse_number<double>(key, value);
  } else if (key == "data_seed") {
    cfg.data_seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "profile") {
    if (value.empty()) throw ConfigError("profile", "empty path");
    cfg.profile_path = std::filesystem::path(std::string(value));
  } else if (key == "epsilon") {
    cfg.epsilon = parse_number<double>(key, value);
  } else if (key == "epsilon_scope") {
    if (value == "central") {
      cfg.epsilon_is_central = true;
    } else if (value == "local") {
      cfg.epsilon_is_central = false;
    } else {
      throw ConfigError("epsilon_scope", "expected 'central' or 'local'");
    }
  } else if (key == "delta") {
    cfg.delta = parse_number<double>(key, value);
  } else if (key == "k") {
    if (value == "max") {
      cfg.k_queries = kQueriesAllPairs;
    } else if (value == "m") {
      cfg.k_queries = kQueriesM;
    } else {
      cfg.k_queries = parse_int(key, value);
      if (cfg.k_queries < 1) throw ConfigError("k", "must be at least 1, 'm' or 'max'");
    }
  } else if (key == "reps") {
    cfg.repetitions = parse_int(key, value);
  } else if (key == "seed") {
    cfg.master_seed = parse_number<std::uint64_t>(key, value);
  } else {
    throw ConfigError(std::string(key), "unknown key");
  }
}

std::vector<ExperimentConfig> parse_config(std::istream& in, const std::filesystem::path& base_dir) {
  std::vector<ExperimentConfig> cells;
  ExperimentConfig defaults;
  ExperimentConfig* target = &defaults;
  bool method_seen = false;
  bool default_method = false;

  auto close_cell = [&](std::size_t line_no) {
    if (target != &defaults && !method_seen) {
      throw ConfigError("method", "section '" + target->name + "' ending before line " +
                                      std::to_string(line_no) + " has no method");
    }
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("section", "line " + std::to_string(line_no) + ": missing ']'");
      close_cell(line_no);
      const std::string name(trim(line.substr(1, line.size() - 2)));
      if (name == "defaults") {
        target = &defaults;
      } else {
        if (name.empty()) throw ConfigError("section", "line " + std::to_string(line_no) + ": empty name");
        cells.push_back(defaults);
        cells.back().name = name;
        target = &cells.back();
        method_seen = default_method;
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("syntax", "line " + std::to_string(line_no) + ": expected key = value");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    try {
      apply_setting(*target, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(e.field(), "line " + std::to_string(line_no) + ": " +
                                         std::string(e.what()).substr(e.field().size() + 2));
    }
    if (key == "method") (target == &defaults ? default_method : method_seen) = true;
    if (key == "profile" && target->profile_path->is_relative() && !base_dir.empty()) {
      target->profile_path = base_dir / *target->profile_path;
    }
  }
  close_cell(line_no + 1);
  return cells;
}

std::vector<ExperimentConfig> load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open " + path.string());
  return parse_config(in, path.parent_path());
}

}  // namespace ddprank
