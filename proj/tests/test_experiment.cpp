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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "ddprank/config.hpp"
#include "ddprank/error.hpp"
#include "ddprank/experiment.hpp"
#include "ddprank/profile_io.hpp"
#include "test_support.hpp"

namespace ddprank {
namespace {

ExperimentConfig small(Method method) {
  ExperimentConfig c;
  c.method = method;
  c.m = 4;
  c.n = 60;
  c.theta = 0.5;
  c.repetitions = 10;
  c.master_seed = 11;
  return c;
}

std::string csv(std::span<const SweepRow> rows) {
  std::ostringstream out;
  write_results_csv(out, rows);
  return out.str();
}

std::string field_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "<none>";
}

TEST_CASE("method names round trip") {
  for (auto m : {Method::kDdpHelnaksort, Method::kDdpHelnaksortNoShuffle, Method::kLdpKwiksort,
                 Method::kLdpQuicksort, Method::kHra, Method::kKemeny}) {
    CHECK(parse_method(to_string(m)) == m);
  }
  CHECK(field_of([] { parse_method("borda"); }) == "method");
  CHECK(uses_shuffler(Method::kDdpHelnaksort));
  CHECK_FALSE(uses_shuffler(Method::kDdpHelnaksortNoShuffle));
  CHECK_FALSE(is_private(Method::kKemeny));
}

TEST_CASE("validation names the offending field") {
  auto c = small(Method::kDdpHelnaksort);
  c.repetitions = 0;
  CHECK(field_of([&] { c.validate(); }) == "reps");
  c = small(Method::kDdpHelnaksort);
  c.epsilon = 0;
  CHECK(field_of([&] { c.validate(); }) == "epsilon");
  c = small(Method::kDdpHelnaksort);
  c.k_queries = 7;
  CHECK(field_of([&] { prepare(c); }) == "k");
  c = small(Method::kKemeny);
  c.m = 9;
  CHECK(field_of([&] { prepare(c); }) == "m");
  c = small(Method::kHra);
  c.profile_path = "/nonexistent/profile.csv";
  CHECK(field_of([&] { prepare(c); }) == "profile");
}

TEST_CASE("central epsilon is converted for the shuffled pipeline only") {
  auto c = small(Method::kDdpHelnaksort);
  c.m = 4;
  c.n = 100;
  const auto cell = prepare(c);
  CHECK(cell.local_spec.epsilon == doctest::Approx(1.0 + std::log(100.0 / 6.0)).epsilon(1e-9));
  CHECK(cell.k == 1);
  for (auto m : {Method::kDdpHelnaksortNoShuffle, Method::kLdpKwiksort, Method::kLdpQuicksort}) {
    c.method = m;
    CHECK(prepare(c).local_spec.epsilon == 1.0);
  }
  c.method = Method::kDdpHelnaksort;
  c.epsilon_is_central = false;
  CHECK(prepare(c).local_spec.epsilon == 1.0);
  c.epsilon_is_central.reset();
  c.k_queries = kQueriesAllPairs;
  CHECK(prepare(c).k == 6);
  CHECK(prepare(c).local_spec.epsilon == 1.0);  // no amplification credit beyond one answer
  CHECK(prepare(c).local_spec.k_queries == 6);
  c.k_queries = kQueriesM;
  CHECK(prepare(c).k == 4);
}

TEST_CASE("run_once examples") {
  auto hra = small(Method::kHra);
  hra.theta = 50.0;  // effectively unanimous
  CHECK(run_once(hra, 0) == 0.0);

  auto ddp = small(Method::kDdpHelnaksort);
  ddp.epsilon = 1e6;
  ddp.epsilon_is_central = false;
  ddp.k_queries = kQueriesAllPairs;
  auto ref = small(Method::kHra);
  for (int rep = 0; rep < 5; ++rep) CHECK(run_once(ddp, rep) == doctest::Approx(run_once(ref, rep)));

  const double best = run_once(small(Method::kKemeny), 0);
  for (auto m : {Method::kDdpHelnaksort, Method::kDdpHelnaksortNoShuffle, Method::kLdpKwiksort,
                 Method::kLdpQuicksort, Method::kHra}) {
    for (int rep = 0; rep < 5; ++rep) CHECK(best <= run_once(small(m), rep) + 1e-12);
  }
}

TEST_CASE("run_once depends only on the repetition index") {
  const auto cell = prepare(small(Method::kDdpHelnaksort));
  const double a = run_once(cell, 3);
  run_once(cell, 1);
  CHECK(run_once(cell, 3) == a);
  const auto detail = run_repetition(cell, 3);
  REQUIRE(detail.batch);
  CHECK(detail.batch->answer_count() == 60);
  CHECK(detail.distance == a);
}

TEST_CASE("run_experiment statistics") {
  auto c = small(Method::kLdpKwiksort);
  c.repetitions = 25;
  const auto r = run_experiment(c);
  REQUIRE(r.distances.size() == 25);
  double sum = 0;
  for (double d : r.distances) {
    CHECK(d >= 0.0);
    CHECK(d <= 1.0);
    sum += d;
  }
  CHECK(r.mean == doctest::Approx(sum / 25));
  CHECK(r.stddev >= 0.0);
  CHECK(r.ci95 == doctest::Approx(1.96 * r.stddev / 5.0));
  CHECK(r.seconds == 0.0);

  RunOptions three;
  three.threads = 3;
  CHECK(run_experiment(c, three).distances == r.distances);
}

TEST_CASE("confidence interval shrinks with repetitions") {
  auto c = small(Method::kDdpHelnaksortNoShuffle);
  c.repetitions = 30;
  const double ci30 = run_experiment(c).ci95;
  c.repetitions = 300;
  const double ci300 = run_experiment(c).ci95;
  const double ratio = ci30 / ci300;
  CHECK(ratio > std::sqrt(10.0) * 0.6);
  CHECK(ratio < std::sqrt(10.0) * 1.6);
}

TEST_CASE("sweep output") {
  CHECK(csv({}) == std::string(kResultHeader) + "\n");

  std::vector<ExperimentConfig> cells{small(Method::kHra), small(Method::kKemeny)};
  cells[1].m = 9;  // fails, the sweep continues
  cells.push_back(small(Method::kLdpQuicksort));
  const auto rows = run_sweep(cells);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].result);
  CHECK_FALSE(rows[1].result);
  CHECK_FALSE(rows[1].error.empty());
  CHECK(rows[2].result);

  const std::string text = csv(rows);
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  CHECK(line == kResultHeader);
  std::getline(lines, line);
  CHECK(line.rfind("hra,4,60,0.5,1,local,0.0001,1,0,10,", 0) == 0);
  std::getline(lines, line);
  CHECK(line.rfind("kemeny,9,", 0) == 0);
  CHECK(line.substr(line.size() - 4) == ",,,,");

  RunOptions four;
  four.threads = 4;
  CHECK(csv(run_sweep(cells, four)) == text);

  std::ostringstream plot;
  write_plot_data(plot, rows, PlotAxis::kK);
  const std::string plotted = plot.str();
  CHECK(plotted.rfind("x,series,y,ci\n1,hra,", 0) == 0);
  CHECK(std::count(plotted.begin(), plotted.end(), '\n') == 3);
}

TEST_CASE("config parsing") {
  std::istringstream in(R"(# sweep
[defaults]
m = 5
n = 40
reps = 3
seed = 9

[first]
method = ddp-helnaksort
k = max
epsilon_scope = local

[second]
method = ldp-quicksort
theta = 1.5
; comment
profile = data/p.csv
)");
  const auto cells = parse_config(in, "/base");
  REQUIRE(cells.size() == 2);
  CHECK(cells[0].name == "first");
  CHECK(cells[0].m == 5);
  CHECK(cells[0].k_queries == kQueriesAllPairs);
  CHECK(cells[0].epsilon_is_central == false);
  CHECK(cells[0].master_seed == 9);
  CHECK(cells[1].method == Method::kLdpQuicksort);
  CHECK(cells[1].theta == 1.5);
  CHECK(cells[1].repetitions == 3);
  CHECK(*cells[1].profile_path == std::filesystem::path("/base/data/p.csv"));

  std::istringstream defaults_method("[defaults]\nmethod = hra\n[a]\n[b]\nm = 3\n");
  CHECK(parse_config(defaults_method).size() == 2);

  auto fails = [](const char* text) {
    std::istringstream s(text);
    return field_of([&] { parse_config(s); });
  };
  CHECK(fails("[a]\nm = 5\n") == "method");
  CHECK(fails("[a]\nmethod = hra\nm = five\n") == "m");
  CHECK(fails("[a]\nmethod = hra\nbogus = 1\n") == "bogus");
  CHECK(fails("[a]\nmethod = hra\nk = -3\n") == "k");
  CHECK(fails("[a]\nmethod = hra\nepsilon_scope = both\n") == "epsilon_scope");
}

TEST_CASE("file-backed profiles") {
  const auto dir = std::filesystem::temp_directory_path() / "ddprank_test_experiment";
  std::filesystem::create_directories(dir);
  const auto path = dir / "profile.csv";
  save_profile(testing::repeat({2, 0, 1}, 7), path);
  auto c = small(Method::kHra);
  c.profile_path = path;
  const auto cell = prepare(c);
  CHECK(cell.m == 3);
  CHECK(cell.profile.size() == 7);
  CHECK(run_once(cell, 0) == 0.0);
  SweepRow row{c, run_experiment(c), {}};
  const auto text = csv(std::span(&row, 1));
  CHECK(text.find("\nhra,3,7,,1,") != std::string::npos);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace ddprank
