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

#ifndef DDPRANK_EXPERIMENT_HPP_
#define DDPRANK_EXPERIMENT_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ddprank/privacy.hpp"
#include "ddprank/protocol.hpp"
#include "ddprank/ranking.hpp"

namespace ddprank {

enum class Method {
  kDdpHelnaksort,           // local noise, shuffler, hierarchical net-win aggregation
  kDdpHelnaksortNoShuffle,  // same without the shuffler
  kLdpKwiksort,
  kLdpQuicksort,
  kHra,     // noiseless full tally, Borda tie break
  kKemeny,  // noiseless exhaustive optimum
};

std::string_view to_string(Method method) noexcept;
// Throws ConfigError("method", ...) for unknown names.
Method parse_method(std::string_view name);
bool is_private(Method method) noexcept;
bool uses_shuffler(Method method) noexcept;

// Sentinels for ExperimentConfig::k_queries resolved once m is known.
inline constexpr int kQueriesAllPairs = -1;  // C(m, 2)
inline constexpr int kQueriesM = -2;         // m

struct ExperimentConfig {
  std::string name;
  Method method = Method::kDdpHelnaksort;

  // Data source: a profile file, or Mallows parameters when unset.
  std::optional<std::filesystem::path> profile_path;
  int m = 15;
  int n = 100;
  double theta = 0.25;
  std::optional<std::uint64_t> data_seed;  // defaults to master_seed

  double epsilon = 1.0;
  // Central for ddp-helnaksort, local otherwise, unless set.
  std::optional<bool> epsilon_is_central;
  double delta = 1e-4;
  int k_queries = 1;
  int repetitions = 300;
  std::uint64_t master_seed = 0;

  // Throws ConfigError naming the first invalid field.
  void validate() const;
  bool epsilon_central() const noexcept;
};

// A config with its data materialized and budgets resolved.
struct PreparedCell {
  ExperimentConfig config;
  Profile profile;
  int m = 0;
  int k = 1;
  PrivacySpec local_spec;  // what each agent's randomizer uses
};

PreparedCell prepare(const ExperimentConfig& cfg);

struct RepetitionDetail {
  double distance = 0.0;
  Ranking output;
  std::optional<ShuffledBatch> batch;  // private pipelines only
};

// rep_index selects the repetition's seed, derive_seed(master_seed, rep).
RepetitionDetail run_repetition(const PreparedCell& cell, int rep_index);
double run_once(const PreparedCell& cell, int rep_index);
double run_once(const ExperimentConfig& cfg, int rep_index);

struct RunOptions {
  unsigned threads = 1;
  bool timing = false;  // record wall time; otherwise `seconds` is 0
};

struct ExperimentResult {
  PreparedCell cell;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
  double ci95 = 0.0;    // 1.96 * stddev / sqrt(reps)
  double seconds = 0.0;
  std::vector<double> distances;
};

ExperimentResult run_experiment(const ExperimentConfig& cfg, const RunOptions& options = {});

struct SweepRow {
  ExperimentConfig config;
  std::optional<ExperimentResult> result;
  std::string error;
};

// Cells run in order; a failing cell keeps its row with the error recorded.
std::vector<SweepRow> run_sweep(std::span<const ExperimentConfig> configs, const RunOptions& options = {});

inline constexpr std::string_view kResultHeader =
    "method,m,n,theta,epsilon,epsilon_scope,delta,k,shuffle,reps,mean_dist,std_dist,ci95,seconds";

void write_results_csv(std::ostream& out, std::span<const SweepRow> rows);

enum class PlotAxis { kK, kEpsilon, kN, kM, kTheta };
PlotAxis parse_plot_axis(std::string_view name);

// Long format `x,series,y,ci`, one line per successful cell.
void write_plot_data(std::ostream& out, std::span<const SweepRow> rows, PlotAxis axis);

}  // namespace ddprank

#endif  // DDPRANK_EXPERIMENT_HPP_
