// Copyright 2026 The wbrl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wbrl/pgg.hpp"

#include <stdexcept>

#include "wbrl/rng.hpp"
#include "wbrl/text.hpp"

namespace wbrl {

void PggConfig::validate() const {
  if (endowment <= 0) throw std::invalid_argument("PggConfig: endowment must be positive");
  if (multiplier <= 0.0) throw std::invalid_argument("PggConfig: multiplier must be positive");
  if (group_size < 2) throw std::invalid_argument("PggConfig: group_size must be at least 2");
  if (rounds < 1) throw std::invalid_argument("PggConfig: rounds must be at least 1");
  if (granularity < 1) throw std::invalid_argument("PggConfig: granularity must be at least 1");
  if (endowment % granularity != 0) {
    throw std::invalid_argument("PggConfig: endowment " + std::to_string(endowment) +
                                " not divisible by granularity " + std::to_string(granularity));
  }
}

std::vector<double> pgg_payoffs(const std::vector<int>& contributions, const PggConfig& config) {
  config.validate();
  if (static_cast<int>(contributions.size()) != config.group_size) {
    throw std::invalid_argument("pgg_payoffs: expected " + std::to_string(config.group_size) +
                                " contributions, got " + std::to_string(contributions.size()));
  }
  long long total = 0;
  for (int c : contributions) {
    if (c < 0 || c > config.endowment) {
      throw std::invalid_argument("pgg_payoffs: contribution " + std::to_string(c) +
                                  " outside [0, " + std::to_string(config.endowment) + "]");
    }
    total += c;
  }
  double share = config.multiplier * static_cast<double>(total) / config.group_size;
  std::vector<double> payoffs(contributions.size());
  for (std::size_t i = 0; i < contributions.size(); ++i) {
    payoffs[i] = static_cast<double>(config.endowment - contributions[i]) + share;
  }
  return payoffs;
}

std::string PggHistory::to_csv() const {
  std::string out = "episode,round,player,contribution,payoff\n";
  for (const PggRound& r : rounds) {
    for (std::size_t p = 0; p < r.contributions.size(); ++p) {
      out += std::to_string(episode);
      out += ',';
      out += std::to_string(r.round);
      out += ',';
      out += std::to_string(p + 1);
      out += ',';
      out += std::to_string(r.contributions[p]);
      out += ',';
      out += format_double(r.payoffs[p]);
      out += '\n';
    }
  }
  return out;
}

std::vector<double> PggHistory::cumulative_payoffs() const {
  std::vector<double> total(static_cast<std::size_t>(config.group_size), 0.0);
  for (const PggRound& r : rounds) {
    for (std::size_t p = 0; p < r.payoffs.size(); ++p) total[p] += r.payoffs[p];
  }
  return total;
}

PggHistory pgg_episode(const std::vector<ActionDistribution>& policies, const PggConfig& config,
                       std::uint64_t seed, int episode) {
  config.validate();
  if (static_cast<int>(policies.size()) != config.group_size) {
    throw std::invalid_argument("pgg_episode: expected " + std::to_string(config.group_size) +
                                " policies, got " + std::to_string(policies.size()));
  }
  for (const ActionDistribution& policy : policies) {
    if (policy.size() != config.action_count()) {
      throw std::invalid_argument("pgg_episode: policy over " + std::to_string(policy.size()) +
                                  " actions, game has " + std::to_string(config.action_count()));
    }
  }
  Rng rng(seed);
  PggHistory history;
  history.config = config;
  history.episode = episode;
  history.rounds.reserve(static_cast<std::size_t>(config.rounds));
  for (int t = 1; t <= config.rounds; ++t) {
    PggRound round;
    round.round = t;
    round.contributions.reserve(policies.size());
    for (const ActionDistribution& policy : policies) {
      int action = rng.sample_index(policy.mass());
      round.contributions.push_back(config.contribution_of_action(action));
    }
    round.payoffs = pgg_payoffs(round.contributions, config);
    history.rounds.push_back(std::move(round));
  }
  return history;
}

}  // namespace wbrl
