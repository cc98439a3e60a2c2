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

#include "ddprank/profile_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ddprank/error.hpp"

namespace ddprank {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_index(std::string_view field, std::size_t line) {
  field = trim(field);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw ParseError(line, "'" + std::string(field) + "' is not an alternative index");
  }
  return value;
}

}  // namespace

Profile read_profile(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  int m = -1;
  Profile profile;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty()) continue;
    const auto fields = split_fields(view);

    if (m < 0) {
      if (trim(fields.front()) != "agent") {
        throw ParseError(line_no, "expected header starting with 'agent'");
      }
      m = static_cast<int>(fields.size()) - 1;
      if (m < 2) throw ParseError(line_no, "header must name at least 2 rank columns");
      continue;
    }

    if (static_cast<int>(fields.size()) != m + 1) {
      throw ParseError(line_no, "expected " + std::to_string(m + 1) + " fields, found " +
                                    std::to_string(fields.size()));
    }
    if (trim(fields.front()).empty()) throw ParseError(line_no, "missing agent id");

    std::vector<Alternative> order;
    order.reserve(static_cast<std::size_t>(m));
    for (std::size_t f = 1; f < fields.size(); ++f) order.push_back(parse_index(fields[f], line_no));
    try {
      profile.emplace_back(std::move(order));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, std::string("not a permutation: ") + e.what());
    }
  }

  if (profile.empty()) throw ParseError(0, "no data rows");
  return profile;
}

Profile load_profile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return read_profile(in);
}

void write_profile(std::ostream& out, std::span<const Ranking> profile) {
  if (profile.empty()) throw std::invalid_argument("empty profile");
  const int m = profile.front().size();
  out << "agent";
  for (int r = 1; r <= m; ++r) out << ",r" << r;
  out << '\n';
  for (std::size_t u = 0; u < profile.size(); ++u) {
    if (profile[u].size() != m) throw std::invalid_argument("profile mixes alternative counts");
    out << u;
    for (Alternative a : profile[u].order()) out << ',' << a;
    out << '\n';
  }
}

void save_profile(std::span<const Ranking> profile, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_profile(out, profile);
}

}  // namespace ddprank
