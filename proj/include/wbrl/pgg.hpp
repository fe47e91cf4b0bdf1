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

#ifndef WBRL_PGG_HPP_
#define WBRL_PGG_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "wbrl/distribution.hpp"

namespace wbrl {

// Repeated public goods game: each round every player splits an endowment
// between private retention and a common pool; the pool is scaled by
// `multiplier` and shared equally. With multiplier / group_size < 1 a token
// kept is worth more than a token contributed, so contributing nothing is the
// strictly dominant one-shot strategy.
struct PggConfig {
  int endowment = 40;      // tokens per player per round
  double multiplier = 1.6; // pool scaling before redistribution
  int group_size = 4;
  int rounds = 20;
  int granularity = 1;     // contribution step in tokens; coarser grids for fast tests

  // Own-payoff change per token contributed.
  double marginal_per_capita_return() const { return multiplier / group_size; }
  // True when contributing zero strictly dominates.
  bool zero_dominant() const { return multiplier / group_size < 1.0; }
  // One action per feasible contribution level: 0, granularity, ..., endowment.
  int action_count() const { return endowment / granularity + 1; }
  ActionSpace action_space() const { return ActionSpace(action_count()); }
  int contribution_of_action(int action) const { return action * granularity; }
  int action_of_contribution(int contribution) const { return contribution / granularity; }

  void validate() const;
};

// payoff_i = (endowment - c_i) + (multiplier / group_size) * sum_j c_j.
// Contributions are in tokens, one per player, each within [0, endowment].
std::vector<double> pgg_payoffs(const std::vector<int>& contributions, const PggConfig& config);

// What players see of the others between rounds. Payoffs depend on the
// others' total only, so both modes induce the same incentives; the
// individual mode additionally exposes the full contribution profile.
enum class ObservationMode { kIndividual, kGroupTotal };

struct PggRound {
  int round = 0;  // 1-indexed
  std::vector<int> contributions;
  std::vector<double> payoffs;
};

struct PggHistory {
  PggConfig config;
  int episode = 1;
  std::vector<PggRound> rounds;

  // Columns: episode,round,player,contribution,payoff (players 1-indexed).
  std::string to_csv() const;
  std::vector<double> cumulative_payoffs() const;
};

// Samples one episode with a fixed per-player policy, deterministic per seed.
PggHistory pgg_episode(const std::vector<ActionDistribution>& policies, const PggConfig& config,
                       std::uint64_t seed, int episode = 1);

}  // namespace wbrl

#endif  // WBRL_PGG_HPP_
