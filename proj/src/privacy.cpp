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

#include "ddprank/privacy.hpp"

#include <cmath>
#include <stdexcept>

#include "ddprank/ranking.hpp"

namespace ddprank {

void PrivacySpec::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("epsilon must be positive and finite");
  }
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  if (k_queries < 1) throw std::invalid_argument("k_queries must be at least 1");
  if (!(sensitivity > 0.0) || !std::isfinite(sensitivity)) {
    throw std::invalid_argument("sensitivity must be positive and finite");
  }
}

std::string_view to_string(CentralBound status) noexcept {
  switch (status) {
    case CentralBound::kApplicable: return "applicable";
    case CentralBound::kMultipleQueries: return "k_not_one";
    case CentralBound::kNoAmplification: return "n_prime_le_one";
    case CentralBound::kBudgetTooSmall: return "epsilon_le_ln_n_prime";
  }
  return "unknown";
}

double gaussian_sigma(const PrivacySpec& spec) {
  spec.validate();
  return spec.k_queries * spec.sensitivity * std::sqrt(2.0 * std::log(1.25 / spec.delta)) /
         spec.epsilon;
}

double flip_probability(double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  // 1 - Phi(0.5 / sigma)
  return 0.5 * std::erfc(0.5 / sigma / std::sqrt(2.0));
}

int randomize_bit(int bit, double sigma, Rng& rng) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("randomize_bit expects 0 or 1");
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  const double noisy = static_cast<double>(bit) + sigma * rng.normal();
  return noisy > 0.5 ? 1 : 0;
}

PrivacyReport amplification_report(const PrivacySpec& spec, long long n, int m) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  PrivacyReport report;
  report.sigma = gaussian_sigma(spec);
  report.epsilon_local = spec.epsilon;
  if (spec.k_queries != 1) {
    report.status = CentralBound::kMultipleQueries;
    return report;
  }
  const double n_prime = static_cast<double>(n) / static_cast<double>(pair_count(m));
  report.n_prime = n_prime;
  if (!(n_prime > 1.0)) {
    report.status = CentralBound::kNoAmplification;
    return report;
  }
  const double gain = std::log(n_prime);
  if (!(spec.epsilon > gain)) {
    report.status = CentralBound::kBudgetTooSmall;
    return report;
  }
  report.epsilon_central = spec.epsilon - gain;
  report.status = CentralBound::kApplicable;
  return report;
}

PrivacySpec local_epsilon_for_central(double target_central, double delta, long long n, int m) {
  if (!(target_central > 0.0) || !std::isfinite(target_central)) {
    throw std::invalid_argument("target central epsilon must be positive and finite");
  }
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  const double n_prime = static_cast<double>(n) / static_cast<double>(pair_count(m));
  PrivacySpec spec;
  spec.delta = delta;
  spec.k_queries = 1;
  spec.epsilon = n_prime > 1.0 ? target_central + std::log(n_prime) : target_central;
  return spec;
}

}  // namespace ddprank
