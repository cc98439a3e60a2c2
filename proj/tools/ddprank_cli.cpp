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

// ddprank: generate profiles, aggregate them, size privacy budgets and run
// experiment sweeps.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ddprank/aggregation.hpp"
#include "ddprank/config.hpp"
#include "ddprank/error.hpp"
#include "ddprank/experiment.hpp"
#include "ddprank/mallows.hpp"
#include "ddprank/privacy.hpp"
#include "ddprank/profile_io.hpp"

namespace {

using namespace ddprank;

// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

std::string join(const Ranking& r) {
  std::string s;
  for (Alternative a : r.order()) s += (s.empty() ? "" : ",") + std::to_string(a);
  return s;
}

struct GenerateArgs {
  int m = 15;
  int n = 100;
  double theta = 0.25;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_generate(const GenerateArgs& a) {
  MallowsConfig cfg;
  cfg.m = a.m;
  cfg.n = a.n;
  cfg.theta = a.theta;
  cfg.seed = a.seed;
  const Profile profile = sample_mallows(cfg);
  Sink sink(a.out);
  write_profile(sink.stream(), profile);
  return 0;
}

struct AggregateArgs {
  std::string method = "ra";
  std::string in;
  std::string out;
  std::uint64_t seed = 0;
};

int cmd_aggregate(const AggregateArgs& a) {
  const Profile profile = load_profile(a.in);
  Ranking result = Ranking::identity(2);
  if (a.method == "kemeny") {
    result = kemeny_optimal(profile).ranking;
  } else {
    const PairwiseCounts counts = tally(profile);
    if (a.method == "ra") {
      result = ra_aggregate(counts);
    } else if (a.method == "hra") {
      result = hra_aggregate(counts);
    } else {
      result = borda_aggregate(counts);
    }
  }
  Sink sink(a.out);
  sink.stream() << "ranking=" << join(result) << '\n'
                << "average_kendall=" << fmt("%.6f", average_kendall(result, profile)) << '\n';
  return 0;
}

struct PrivacyArgs {
  double epsilon = 1.0;
  double delta = 1e-4;
  int k = 1;
  long long n = 100;
  int m = 4;
  bool central = false;
  std::string out;
  std::uint64_t seed = 0;
};

int cmd_privacy(const PrivacyArgs& a) {
  PrivacySpec spec;
  if (a.central && a.k == 1) {
    spec = local_epsilon_for_central(a.epsilon, a.delta, a.n, a.m);
  } else {
    spec.epsilon = a.epsilon;
    spec.delta = a.delta;
  }
  spec.k_queries = a.k;
  const PrivacyReport report = amplification_report(spec, a.n, a.m);

  const std::string central =
      report.epsilon_central ? fmt("%.6f", *report.epsilon_central) : "n/a";
  const std::string n_prime = report.n_prime ? fmt("%.6f", *report.n_prime) : "n/a";

  Sink sink(a.out);
  auto& os = sink.stream();
  os << "quantity         value\n"
     << "sigma            " << fmt("%.6f", report.sigma) << '\n'
     << "epsilon_local    " << fmt("%.6f", report.epsilon_local) << '\n'
     << "epsilon_central  " << central << '\n'
     << "n_prime          " << n_prime << '\n'
     << "central_bound    " << to_string(report.status) << "\n\n";
  os << "sigma=" << fmt("%.12g", report.sigma) << '\n'
     << "epsilon_local=" << fmt("%.12g", report.epsilon_local) << '\n'
     << "epsilon_central=" << (report.epsilon_central ? fmt("%.12g", *report.epsilon_central) : "") << '\n'
     << "n_prime=" << (report.n_prime ? fmt("%.12g", *report.n_prime) : "") << '\n'
     << "central_bound=" << to_string(report.status) << '\n';
  return 0;
}

struct RunArgs {
  std::vector<std::pair<std::string, std::string>> settings;
  unsigned threads = 1;
  bool timing = false;
  bool verbose = false;
  std::string dump_answers;
  std::string out;
};

int cmd_run(const RunArgs& a) {
  ExperimentConfig cfg;
  cfg.name = "run";
  for (const auto& [key, value] : a.settings) apply_setting(cfg, key, value);

  const ExperimentResult result = run_experiment(cfg, RunOptions{a.threads, a.timing});
  SweepRow row{cfg, result, {}};
  Sink sink(a.out);
  write_results_csv(sink.stream(), std::span(&row, 1));
  if (a.verbose) {
    sink.stream() << "\nrep,distance\n";
    for (std::size_t r = 0; r < result.distances.size(); ++r) {
      sink.stream() << r << ',' << fmt("%.6f", result.distances[r]) << '\n';
    }
  }
  if (!a.dump_answers.empty()) {
    const auto detail = run_repetition(result.cell, 0);
    if (!detail.batch) throw std::runtime_error("--dump-answers needs a ddp-helnaksort method");
    std::ofstream dump(a.dump_answers);
    if (!dump) throw std::runtime_error("cannot write " + a.dump_answers);
    write_answer_dump(dump, *detail.batch);
  }
  return 0;
}

struct SweepArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  bool timing = false;
  std::string out;
  std::string plot_data;
  std::string x_axis = "k";
};

int cmd_sweep(const SweepArgs& a) {
  auto configs = load_config(a.config);
  if (a.seed) {
    for (auto& c : configs) c.master_seed = *a.seed;
  }
  const PlotAxis axis = parse_plot_axis(a.x_axis);
  const auto rows = run_sweep(configs, RunOptions{a.threads, a.timing});
  int failures = 0;
  for (const auto& row : rows) {
    if (!row.error.empty()) {
      ++failures;
      std::cerr << "cell '" << row.config.name << "' (" << to_string(row.config.method)
                << ") failed: " << row.error << '\n';
    }
  }
  Sink sink(a.out);
  write_results_csv(sink.stream(), rows);
  if (!a.plot_data.empty()) {
    std::ofstream plot(a.plot_data);
    if (!plot) throw std::runtime_error("cannot write " + a.plot_data);
    write_plot_data(plot, rows, axis);
  }
  return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Privacy-preserving rank aggregation simulator"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Sample a Mallows profile as CSV");
  generate->add_option("--m", gen.m, "Alternatives")->check(CLI::Range(2, 1 << 16));
  generate->add_option("--n", gen.n, "Agents")->check(CLI::PositiveNumber);
  generate->add_option("--theta", gen.theta, "Dispersion (>= 0)")->check(CLI::NonNegativeNumber);
  generate->add_option("--seed", gen.seed, "RNG seed");
  generate->add_option("--out", gen.out, "Output path (default stdout)");

  AggregateArgs agg;
  auto* aggregate = app.add_subcommand("aggregate", "Aggregate a profile CSV without noise");
  aggregate->add_option("--method", agg.method, "Aggregator")
      ->check(CLI::IsMember({"ra", "hra", "kemeny", "borda"}));
  aggregate->add_option("--in", agg.in, "Profile CSV")->required()->check(CLI::ExistingFile);
  aggregate->add_option("--out", agg.out, "Output path (default stdout)");
  aggregate->add_option("--seed", agg.seed, "Unused; aggregation is deterministic");

  PrivacyArgs priv;
  auto* privacy = app.add_subcommand("privacy", "Noise scale and shuffle amplification");
  privacy->add_option("--epsilon", priv.epsilon, "Budget (local unless --central)")->required();
  privacy->add_option("--delta", priv.delta, "Delta");
  privacy->add_option("--k", priv.k, "Answers per agent");
  privacy->add_option("--n", priv.n, "Agents")->required();
  privacy->add_option("--m", priv.m, "Alternatives")->required();
  privacy->add_flag("--central", priv.central, "Treat --epsilon as the central target");
  privacy->add_option("--out", priv.out, "Output path (default stdout)");
  privacy->add_option("--seed", priv.seed, "Unused; accounting is deterministic");

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run a single experiment cell");
  for (const char* key : {"method", "m", "n", "theta", "data_seed", "profile", "epsilon",
                          "epsilon_scope", "delta", "k", "reps", "seed"}) {
    std::string flag = std::string("--") + key;
    for (auto& c : flag) c = c == '_' ? '-' : c;
    run_cmd->add_option_function<std::string>(
        flag, [&run, key](const std::string& v) { run.settings.emplace_back(key, v); },
        std::string("Config key '") + key + "'");
  }
  run_cmd->add_option("--threads", run.threads, "Worker threads for repetitions");
  run_cmd->add_flag("--timing", run.timing, "Record wall time in the seconds column");
  run_cmd->add_flag("--verbose", run.verbose, "Also print per-repetition distances");
  run_cmd->add_option("--dump-answers", run.dump_answers, "Write repetition 0's shuffled answers");
  run_cmd->add_option("--out", run.out, "Output path (default stdout)");

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "Run every cell of a config file");
  sweep->add_option("--config", sw.config, "Sweep config")->required()->check(CLI::ExistingFile);
  sweep->add_option("--seed", sw.seed, "Override every cell's master seed");
  sweep->add_option("--threads", sw.threads, "Worker threads for repetitions");
  sweep->add_flag("--timing", sw.timing, "Record wall time in the seconds column");
  sweep->add_option("--out", sw.out, "Result CSV (default stdout)");
  sweep->add_option("--plot-data", sw.plot_data, "Also write long-format x,series,y,ci CSV");
  sweep->add_option("--x-axis", sw.x_axis, "Plot x variable")
      ->check(CLI::IsMember({"k", "epsilon", "n", "m", "theta"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) return cmd_generate(gen);
    if (*aggregate) return cmd_aggregate(agg);
    if (*privacy) return cmd_privacy(priv);
    if (*run_cmd) return cmd_run(run);
    if (*sweep) return cmd_sweep(sw);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
