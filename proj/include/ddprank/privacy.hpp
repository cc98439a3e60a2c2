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

#ifndef DDPRANK_PRIVACY_HPP_
#define DDPRANK_PRIVACY_HPP_

#include <optional>
#include <string_view>

#include "ddprank/rng.hpp"

namespace ddprank {

struct PrivacySpec {
  double epsilon = 1.0;  // per-agent budget, split evenly over k_queries answers
  double delta = 1e-4;
  int k_queries = 1;
  double sensitivity = 1.0;  // one pairwise bit

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

// Why a central guarantee could not be derived from the shuffle bound.
enum class CentralBound {
  kApplicable,
  kMultipleQueries,  // K != 1
  kNoAmplification,  // n' <= 1
  kBudgetTooSmall,   // epsilon <= ln n'
};

std::string_view to_string(CentralBound status) noexcept;

struct PrivacyReport {
  double sigma = 0.0;
  double epsilon_local = 0.0;
  std::optional<double> epsilon_central;
  std::optional<double> n_prime;  // answers per pair after shuffling, K = 1 only
  CentralBound status = CentralBound::kMultipleQueries;

  bool applicable() const noexcept { return status == CentralBound::kApplicable; }
};

// Gaussian mechanism scale with the budget split per answer:
// sigma = K * sensitivity * sqrt(2 ln(1.25 / delta)) / epsilon.
double gaussian_sigma(const PrivacySpec& spec);

// Probability that randomize_bit returns the complement of its input.
double flip_probability(double sigma);

// Adds N(0, sigma^2) to the bit and thresholds strictly above 0.5.
int randomize_bit(int bit, double sigma, Rng& rng);

PrivacyReport amplification_report(const PrivacySpec& spec, long long n, int m);

// Local budget (K = 1) whose shuffled central guarantee equals
// `target_central`; identity when shuffling cannot amplify.
PrivacySpec local_epsilon_for_central(double target_central, double delta, long long n, int m);

}  // namespace ddprank

#endif  // DDPRANK_PRIVACY_HPP_
