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

#ifndef WBRL_SELFPLAY_HPP_
#define WBRL_SELFPLAY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "wbrl/best_response.hpp"
#include "wbrl/pgg.hpp"

namespace wbrl {

// One repeated-game episode of bounded-rational agents. Every seat runs the
// same penalty configuration; each round every agent best-responds to its
// running estimate of the others' total contribution, then samples a
// contribution from the resulting policy. With the previous-policy schedule
// each agent's prior tracks its own realized action frequency, which is what
// produces gradual, sticky contribution paths.
struct SelfplayConfig {
  PggConfig game;
  PenaltyConfig penalty;  // `prior` is the round-1 prior for every agent
  ObservationMode observation = ObservationMode::kIndividual;
  std::uint64_t seed = 1;
  // When set, seats 1.. play these fixed policies and only seat 0 is the
  // bounded-rational agent. Size must be group_size - 1.
  std::optional<std::vector<ActionDistribution>> fixed_opponents;
};

struct SelfplayRound {
  int round = 0;  // 1-indexed
  // Seat 0's policy this round (placeholder value until filled).
  ActionDistribution policy = ActionDistribution(ActionSpace(1), {1.0});
  double expected_contribution = 0.0;  // policy mean, tokens
  double info_cost = 0.0;              // I(policy, prior) at this round
  double penalized_objective = 0.0;
  std::vector<int> contributions;      // realized, all seats, tokens
  double realized_mean = 0.0;          // group mean this round
};

struct SelfplayResult {
  std::vector<SelfplayRound> rounds;
  PggHistory history;
};

SelfplayResult pgg_selfplay(const SelfplayConfig& config);

}  // namespace wbrl

#endif  // WBRL_SELFPLAY_HPP_
