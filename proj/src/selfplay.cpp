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

#include "wbrl/selfplay.hpp"

#include <stdexcept>
#include <utility>

#include "wbrl/rng.hpp"

namespace wbrl {

SelfplayResult pgg_selfplay(const SelfplayConfig& config) {
  config.game.validate();
  config.penalty.validate();
  const PggConfig& game = config.game;
  const int seats = game.group_size;
  const ActionSpace space = game.action_space();

  int agent_seats = seats;
  if (config.fixed_opponents.has_value()) {
    if (static_cast<int>(config.fixed_opponents->size()) != seats - 1) {
      throw std::invalid_argument("pgg_selfplay: need one fixed opponent per non-focal seat");
    }
    for (const ActionDistribution& opp : *config.fixed_opponents) {
      if (opp.size() != space.size) {
        throw std::invalid_argument("pgg_selfplay: fixed opponent over wrong action space");
      }
    }
    agent_seats = 1;
  }

  const ActionDistribution initial_prior = make_prior(config.penalty.prior, space);
  std::vector<ActionDistribution> priors(static_cast<std::size_t>(agent_seats), initial_prior);
  std::vector<std::vector<int>> own_actions(static_cast<std::size_t>(agent_seats));

  // Opponent-total estimate per seat: prior (or fixed-policy) means before
  // any play, then the running mean of observed totals. Utilities depend on
  // the others only through this scalar, so both observation modes agree.
  auto initial_estimate = [&]() {
    double total = 0.0;
    if (config.fixed_opponents.has_value()) {
      for (const ActionDistribution& opp : *config.fixed_opponents) {
        total += opp.mean() * game.granularity;
      }
    } else {
      total = initial_prior.mean() * game.granularity * (seats - 1);
    }
    return total;
  };
  std::vector<double> others_seen(static_cast<std::size_t>(seats), 0.0);

  Rng rng(config.seed);
  SelfplayResult result;
  result.history.config = game;
  result.rounds.reserve(static_cast<std::size_t>(game.rounds));

  std::vector<double> utilities(static_cast<std::size_t>(space.size));
  const double mpcr = game.marginal_per_capita_return();

  for (int t = 1; t <= game.rounds; ++t) {
    std::vector<ActionDistribution> round_policies;
    round_policies.reserve(static_cast<std::size_t>(seats));
    SelfplayRound round;
    round.round = t;

    for (int seat = 0; seat < agent_seats; ++seat) {
      double opp_total = (t == 1) ? initial_estimate()
                                  : others_seen[static_cast<std::size_t>(seat)] / (t - 1);
      for (int a = 0; a < space.size; ++a) {
        double c = game.contribution_of_action(a);
        utilities[static_cast<std::size_t>(a)] = (game.endowment - c) + mpcr * (c + opp_total);
      }
      BestResponse response = regularized_best_response(
          utilities, priors[static_cast<std::size_t>(seat)], config.penalty.cost,
          config.penalty.lambda);
      if (seat == 0) {
        round.policy = response.policy;
        round.expected_contribution = response.policy.mean() * game.granularity;
        round.info_cost = response.info_cost;
        round.penalized_objective = response.objective;
      }
      round_policies.push_back(std::move(response.policy));
    }
    if (config.fixed_opponents.has_value()) {
      for (const ActionDistribution& opp : *config.fixed_opponents) round_policies.push_back(opp);
    }

    PggRound played;
    played.round = t;
    played.contributions.reserve(static_cast<std::size_t>(seats));
    for (int seat = 0; seat < seats; ++seat) {
      int action = rng.sample_index(round_policies[static_cast<std::size_t>(seat)].mass());
      played.contributions.push_back(game.contribution_of_action(action));
      if (seat < agent_seats) own_actions[static_cast<std::size_t>(seat)].push_back(action);
    }
    played.payoffs = pgg_payoffs(played.contributions, game);

    int total = 0;
    for (int c : played.contributions) total += c;
    for (int seat = 0; seat < seats; ++seat) {
      others_seen[static_cast<std::size_t>(seat)] += total - played.contributions[static_cast<std::size_t>(seat)];
    }
    round.contributions = played.contributions;
    round.realized_mean = static_cast<double>(total) / seats;
    result.rounds.push_back(std::move(round));
    result.history.rounds.push_back(std::move(played));

    if (config.penalty.schedule == PriorSchedule::kPreviousPolicy) {
      for (int seat = 0; seat < agent_seats; ++seat) {
        priors[static_cast<std::size_t>(seat)] =
            ActionDistribution::from_history(space, own_actions[static_cast<std::size_t>(seat)]);
      }
    }
  }
  return result;
}

}  // namespace wbrl
