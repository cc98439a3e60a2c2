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

#include "ddprank/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numeric>
#include <ostream>
#include <thread>

#include "ddprank/aggregation.hpp"
#include "ddprank/baselines.hpp"
#include "ddprank/error.hpp"
#include "ddprank/mallows.hpp"
#include "ddprank/profile_io.hpp"

namespace ddprank {
namespace {

constexpr std::uint64_t kAssignStream = 1;
constexpr std::uint64_t kCollectStream = 2;
constexpr std::uint64_t kShuffleStream = 3;

std::string format_double(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

std::vector<double> run_repetitions(const PreparedCell& cell, unsigned threads) {
  const int reps = cell.config.repetitions;
  std::vector<double> distances(static_cast<std::size_t>(reps), 0.0);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(reps)));
  if (threads == 1) {
    for (int r = 0; r < reps; ++r) distances[static_cast<std::size_t>(r)] = run_once(cell, r);
    return distances;
  }

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (int r = next++; r < reps; r = next++) {
      try {
        distances[static_cast<std::size_t>(r)] = run_once(cell, r);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = reps;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return distances;
}

double axis_value(const ExperimentResult& r, PlotAxis axis) {
  switch (axis) {
    case PlotAxis::kK: return r.cell.k;
    case PlotAxis::kEpsilon: return r.cell.config.epsilon;
    case PlotAxis::kN: return static_cast<double>(r.cell.profile.size());
    case PlotAxis::kM: return r.cell.m;
    case PlotAxis::kTheta: return r.cell.config.theta;
  }
  return 0.0;
}

}  // namespace

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::kDdpHelnaksort: return "ddp-helnaksort";
    case Method::kDdpHelnaksortNoShuffle: return "ddp-helnaksort-noshuffle";
    case Method::kLdpKwiksort: return "ldp-kwiksort";
    case Method::kLdpQuicksort: return "ldp-quicksort";
    case Method::kHra: return "hra";
    case Method::kKemeny: return "kemeny";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::kDdpHelnaksort, Method::kDdpHelnaksortNoShuffle, Method::kLdpKwiksort,
                   Method::kLdpQuicksort, Method::kHra, Method::kKemeny}) {
    if (to_string(m) == name) return m;
  }
  throw ConfigError("method", "unknown method '" + std::string(name) + "'");
}

bool is_private(Method method) noexcept {
  return method != Method::kHra && method != Method::kKemeny;
}

bool uses_shuffler(Method method) noexcept { return method == Method::kDdpHelnaksort; }

bool ExperimentConfig::epsilon_central() const noexcept {
  return epsilon_is_central.value_or(method == Method::kDdpHelnaksort);
}

void ExperimentConfig::validate() const {
  if (repetitions < 1) throw ConfigError("reps", "must be at least 1");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw ConfigError("epsilon", "must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta", "must lie in (0, 1)");
  if (k_queries < 1 && k_queries != kQueriesAllPairs && k_queries != kQueriesM) {
    throw ConfigError("k", "must be at least 1");
  }
  if (profile_path) {
    if (!std::filesystem::exists(*profile_path)) {
      throw ConfigError("profile", "file not found: " + profile_path->string());
    }
  } else {
    if (m < 2) throw ConfigError("m", "must be at least 2");
    if (n < 1) throw ConfigError("n", "must be at least 1");
    if (!(theta >= 0.0) || !std::isfinite(theta)) throw ConfigError("theta", "must be non-negative");
  }
}

PreparedCell prepare(const ExperimentConfig& cfg) {
  cfg.validate();
  PreparedCell cell;
  cell.config = cfg;
  if (cfg.profile_path) {
    try {
      cell.profile = load_profile(*cfg.profile_path);
    } catch (const ParseError& e) {
      throw ConfigError("profile", e.what());
    }
  } else {
    MallowsConfig mc;
    mc.m = cfg.m;
    mc.n = cfg.n;
    mc.theta = cfg.theta;
    mc.seed = cfg.data_seed.value_or(cfg.master_seed);
    cell.profile = sample_mallows(mc);
  }
  cell.m = cell.profile.front().size();
  const auto n = static_cast<long long>(cell.profile.size());

  cell.k = cfg.k_queries == kQueriesAllPairs ? static_cast<int>(pair_count(cell.m))
           : cfg.k_queries == kQueriesM      ? cell.m
                                             : cfg.k_queries;
  const bool bounded_by_pairs = cfg.method == Method::kDdpHelnaksort ||
                                cfg.method == Method::kDdpHelnaksortNoShuffle ||
                                cfg.method == Method::kLdpKwiksort;
  if (bounded_by_pairs && static_cast<std::uint64_t>(cell.k) > pair_count(cell.m)) {
    throw ConfigError("k", "exceeds the " + std::to_string(pair_count(cell.m)) + " available pairs");
  }
  if (cfg.method == Method::kKemeny && cell.m > kKemenyMaxAlternatives) {
    throw ConfigError("m", "kemeny supports at most " + std::to_string(kKemenyMaxAlternatives) +
                               " alternatives");
  }

  // Amplification is only credited when each agent answers once; with more
  // answers the central budget is spent locally as is.
  if (uses_shuffler(cfg.method) && cfg.epsilon_central() && cell.k == 1) {
    cell.local_spec = local_epsilon_for_central(cfg.epsilon, cfg.delta, n, cell.m);
  } else {
    cell.local_spec.epsilon = cfg.epsilon;
    cell.local_spec.delta = cfg.delta;
  }
  cell.local_spec.k_queries = cell.k;
  return cell;
}

RepetitionDetail run_repetition(const PreparedCell& cell, int rep_index) {
  const auto& cfg = cell.config;
  const std::uint64_t seed = derive_seed(cfg.master_seed, static_cast<std::uint64_t>(rep_index));
  const Profile& profile = cell.profile;

  auto finish = [&](Ranking out, std::optional<ShuffledBatch> batch = std::nullopt) {
    const double d = average_kendall(out, profile);
    return RepetitionDetail{d, std::move(out), std::move(batch)};
  };

  switch (cfg.method) {
    case Method::kHra:
      return finish(hra_aggregate(tally(profile)));
    case Method::kKemeny:
      return finish(kemeny_optimal(profile).ranking);
    case Method::kLdpKwiksort: {
      Rng rng(seed);
      return finish(ldp_kwiksort(profile, cell.local_spec, rng));
    }
    case Method::kLdpQuicksort: {
      Rng rng(seed);
      return finish(ldp_quicksort(profile, cell.local_spec, rng));
    }
    case Method::kDdpHelnaksort:
    case Method::kDdpHelnaksortNoShuffle: {
      Rng assign_rng(derive_seed(seed, kAssignStream));
      Rng collect_rng(derive_seed(seed, kCollectStream));
      Rng shuffle_rng(derive_seed(seed, kShuffleStream));
      const auto assignments =
          assign_queries(static_cast<int>(profile.size()), cell.m, cell.k, assign_rng);
      const auto answers = collect(profile, assignments, cell.local_spec, collect_rng);
      ShuffledBatch batch =
          uses_shuffler(cfg.method) ? shuffle(answers, shuffle_rng) : group_by_pair(answers);
      Ranking out = ra_aggregate(tally_batch(batch, cell.m));
      return finish(std::move(out), std::move(batch));
    }
  }
  throw std::logic_error("unhandled method");
}

double run_once(const PreparedCell& cell, int rep_index) {
  return run_repetition(cell, rep_index).distance;
}

double run_once(const ExperimentConfig& cfg, int rep_index) { return run_once(prepare(cfg), rep_index); }

ExperimentResult run_experiment(const ExperimentConfig& cfg, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentResult result;
  result.cell = prepare(cfg);
  result.distances = run_repetitions(result.cell, options.threads);

  const auto reps = static_cast<double>(result.distances.size());
  result.mean = std::accumulate(result.distances.begin(), result.distances.end(), 0.0) / reps;
  double ss = 0.0;
  for (double d : result.distances) ss += (d - result.mean) * (d - result.mean);
  result.stddev = result.distances.size() > 1 ? std::sqrt(ss / (reps - 1.0)) : 0.0;
  result.ci95 = 1.96 * result.stddev / std::sqrt(reps);
  if (options.timing) {
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return result;
}

std::vector<SweepRow> run_sweep(std::span<const ExperimentConfig> configs, const RunOptions& options) {
  std::vector<SweepRow> rows;
  rows.reserve(configs.size());
  for (const auto& cfg : configs) {
    SweepRow row{cfg, std::nullopt, {}};
    try {
      row.result = run_experiment(cfg, options);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_results_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kResultHeader << '\n';
  for (const auto& row : rows) {
    const auto& cfg = row.config;
    const bool from_file = cfg.profile_path.has_value();
    const auto* r = row.result ? &*row.result : nullptr;
    out << to_string(cfg.method) << ','
        << (r ? std::to_string(r->cell.m) : from_file ? "" : std::to_string(cfg.m)) << ','
        << (r ? std::to_string(r->cell.profile.size()) : from_file ? "" : std::to_string(cfg.n)) << ','
        << (from_file ? "" : format_double("%g", cfg.theta)) << ',' << format_double("%g", cfg.epsilon)
        << ',' << (cfg.epsilon_central() ? "central" : "local") << ',' << format_double("%g", cfg.delta)
        << ',' << (r ? std::to_string(r->cell.k) : std::to_string(cfg.k_queries)) << ','
        << (uses_shuffler(cfg.method) ? 1 : 0) << ',' << cfg.repetitions << ',';
    if (r) {
      out << format_double("%.6f", r->mean) << ',' << format_double("%.6f", r->stddev) << ','
          << format_double("%.6f", r->ci95) << ',' << format_double("%.3f", r->seconds);
    } else {
      out << ",,,";
    }
    out << '\n';
  }
}

PlotAxis parse_plot_axis(std::string_view name) {
  if (name == "k") return PlotAxis::kK;
  if (name == "epsilon") return PlotAxis::kEpsilon;
  if (name == "n") return PlotAxis::kN;
  if (name == "m") return PlotAxis::kM;
  if (name == "theta") return PlotAxis::kTheta;
  throw std::invalid_argument("unknown plot axis '" + std::string(name) + "'");
}

void write_plot_data(std::ostream& out, std::span<const SweepRow> rows, PlotAxis axis) {
  out << "x,series,y,ci\n";
  for (const auto& row : rows) {
    if (!row.result) continue;
    const auto& r = *row.result;
    out << format_double("%g", axis_value(r, axis)) << ',' << to_string(row.config.method) << ','
        << format_double("%.6f", r.mean) << ',' << format_double("%.6f", r.ci95) << '\n';
  }
}

}  // namespace ddprank
