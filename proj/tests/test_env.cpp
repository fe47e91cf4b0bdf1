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

#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "wbrl/distribution.hpp"
#include "wbrl/mdp.hpp"
#include "wbrl/pgg.hpp"
#include "wbrl/rng.hpp"

namespace {
using wbrl::ActionDistribution;
using wbrl::ActionSpace;
using wbrl::FiniteMdp;
using wbrl::PggConfig;

FiniteMdp random_mdp(wbrl::Rng& rng, int states, int actions, double discount) {
  FiniteMdp mdp;
  mdp.state_count = states;
  mdp.action_count = actions;
  mdp.discount = discount;
  mdp.transition.resize(static_cast<std::size_t>(states) * actions * states);
  mdp.reward.resize(static_cast<std::size_t>(states) * actions);
  for (int s = 0; s < states; ++s) {
    for (int a = 0; a < actions; ++a) {
      std::vector<double> row = oracles::random_distribution(rng, states, 0.3);
      for (int s2 = 0; s2 < states; ++s2) {
        mdp.transition[(static_cast<std::size_t>(s) * actions + a) * states + s2] = row[s2];
      }
      mdp.reward[static_cast<std::size_t>(s) * actions + a] =
          4.0 * rng.next_double() - 2.0;
    }
  }
  mdp.validate();
  return mdp;
}

// Policy value by direct linear solve of (I - discount * P_pi) v = r_pi.
std::vector<double> solve_policy_value(const FiniteMdp& mdp,
                                       const std::vector<ActionDistribution>& policy,
                                       const std::vector<double>& bonus = {}) {
  const int n = mdp.state_count;
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  std::vector<double> b(n, 0.0);
  for (int s = 0; s < n; ++s) {
    a[s][s] = 1.0;
    for (int act = 0; act < mdp.action_count; ++act) {
      const double w = policy[s][act];
      b[s] += w * mdp.reward_at(s, act);
      for (int s2 = 0; s2 < n; ++s2) {
        a[s][s2] -= mdp.discount * w * mdp.transition_at(s, act, s2);
      }
    }
    if (!bonus.empty()) b[s] += bonus[s];
  }
  auto x = oracles::gauss_solve(a, b);
  REQUIRE(x.has_value());
  return *x;
}

}  // namespace

TEST_CASE("payoffs match the hand-computed formula") {
  PggConfig config;  // 40 tokens, multiplier 1.6, four players

  // The pool returns 0.4 per token to each player.
  CHECK(config.marginal_per_capita_return() == doctest::Approx(0.4));
  CHECK(config.zero_dominant());

  std::vector<double> all_zero = wbrl::pgg_payoffs({0, 0, 0, 0}, config);
  for (double p : all_zero) CHECK(p == 40.0);

  std::vector<double> all_full = wbrl::pgg_payoffs({40, 40, 40, 40}, config);
  for (double p : all_full) CHECK(p == doctest::Approx(64.0).epsilon(1e-12));

  // Mixed profile: total 70, share 28, payoff_i = 40 - c_i + 28.
  std::vector<double> mixed = wbrl::pgg_payoffs({10, 0, 40, 20}, config);
  CHECK(mixed[0] == doctest::Approx(58.0).epsilon(1e-12));
  CHECK(mixed[1] == doctest::Approx(68.0).epsilon(1e-12));
  CHECK(mixed[2] == doctest::Approx(28.0).epsilon(1e-12));
  CHECK(mixed[3] == doctest::Approx(48.0).epsilon(1e-12));

  CHECK_THROWS_AS(wbrl::pgg_payoffs({0, 0, 0}, config), std::invalid_argument);
  CHECK_THROWS_AS(wbrl::pgg_payoffs({0, 0, 0, 41}, config),
                  std::invalid_argument);
  CHECK_THROWS_AS(wbrl::pgg_payoffs({0, 0, 0, -1}, config),
                  std::invalid_argument);
}

TEST_CASE("free riding gains exactly one minus the per-capita return") {
  PggConfig config;
  const double delta = 1.0 - config.marginal_per_capita_return();  // 0.6
  wbrl::Rng rng(31);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<int> profile(4);
    for (int& c : profile) c = rng.next_int(41);
    if (profile[0] == 0) profile[0] = 1;
    std::vector<int> reduced = profile;
    reduced[0] -= 1;
    double own = wbrl::pgg_payoffs(profile, config)[0];
    double own_reduced = wbrl::pgg_payoffs(reduced, config)[0];
    // Keeping one token is worth exactly 0.6, whatever everyone else does.
    CHECK(std::fabs((own_reduced - own) - delta) <= 1e-12);
    // Everyone else loses the per-capita return.
    double other = wbrl::pgg_payoffs(profile, config)[1];
    double other_reduced = wbrl::pgg_payoffs(reduced, config)[1];
    CHECK(std::fabs((other - other_reduced) -
                    config.marginal_per_capita_return()) <= 1e-12);
  }
}

TEST_CASE("group-level accounting identity") {
  PggConfig config;
  wbrl::Rng rng(32);
  for (int rep = 0; rep < 500; ++rep) {
    std::vector<int> profile(4);
    long long total = 0;
    for (int& c : profile) {
      c = rng.next_int(41);
      total += c;
    }
    std::vector<double> payoffs = wbrl::pgg_payoffs(profile, config);
    double sum = 0.0;
    for (double p : payoffs) sum += p;
    // Sum of payoffs = N * endowment + (multiplier - 1) * total.
    CHECK(std::fabs(sum - (4 * 40 + 0.6 * static_cast<double>(total))) <= 1e-9);
  }
}

TEST_CASE("contribution grid and config validation") {
  PggConfig config;
  CHECK(config.action_count() == 41);
  CHECK(config.action_space().size == 41);
  CHECK(config.contribution_of_action(0) == 0);
  CHECK(config.contribution_of_action(40) == 40);

  PggConfig coarse = config;
  coarse.granularity = 5;
  coarse.validate();
  CHECK(coarse.action_count() == 9);
  CHECK(coarse.contribution_of_action(3) == 15);
  CHECK(coarse.action_of_contribution(15) == 3);

  PggConfig bad = config;
  bad.granularity = 3;  // 40 not divisible by 3
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = config;
  bad.group_size = 1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = config;
  bad.endowment = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = config;
  bad.multiplier = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = config;
  bad.rounds = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("episodes are deterministic in the seed") {
  PggConfig config;
  config.rounds = 6;
  std::vector<ActionDistribution> policies(
      4, ActionDistribution::uniform(config.action_space()));

  wbrl::PggHistory a = wbrl::pgg_episode(policies, config, 42);
  wbrl::PggHistory b = wbrl::pgg_episode(policies, config, 42);
  wbrl::PggHistory c = wbrl::pgg_episode(policies, config, 43);

  REQUIRE(a.rounds.size() == 6);
  CHECK(a.to_csv() == b.to_csv());
  CHECK(a.to_csv() != c.to_csv());

  bool any_diff = false;
  for (int r = 0; r < 6; ++r) {
    CHECK(a.rounds[r].round == r + 1);
    REQUIRE(a.rounds[r].contributions.size() == 4);
    std::vector<double> expected =
        wbrl::pgg_payoffs(a.rounds[r].contributions, config);
    CHECK(a.rounds[r].payoffs == expected);
    if (a.rounds[r].contributions != c.rounds[r].contributions) any_diff = true;
  }
  CHECK(any_diff);
}

TEST_CASE("point-mass policies force the whole trajectory") {
  PggConfig config;
  config.rounds = 3;
  std::vector<ActionDistribution> policies;
  for (int i = 0; i < 4; ++i) {
    policies.push_back(
        ActionDistribution::dirac(config.action_space(), 10 * i));
  }
  wbrl::PggHistory h = wbrl::pgg_episode(policies, config, 1);
  for (const wbrl::PggRound& round : h.rounds) {
    CHECK(round.contributions == std::vector<int>{0, 10, 20, 30});
  }
  std::vector<double> cumulative = h.cumulative_payoffs();
  REQUIRE(cumulative.size() == 4);
  // Total 60, share 24: player 0 keeps 40 + 24 per round.
  CHECK(cumulative[0] == doctest::Approx(3 * 64.0).epsilon(1e-12));
  CHECK(cumulative[3] == doctest::Approx(3 * 34.0).epsilon(1e-12));
}

TEST_CASE("episode serialization golden") {
  PggConfig config;
  config.rounds = 2;
  std::vector<ActionDistribution> policies;
  for (int i = 0; i < 4; ++i) {
    policies.push_back(
        ActionDistribution::dirac(config.action_space(), 10 * i));
  }
  wbrl::PggHistory h = wbrl::pgg_episode(policies, config, 7, 3);
  CHECK(h.to_csv() ==
        "episode,round,player,contribution,payoff\n"
        "3,1,1,0,64\n"
        "3,1,2,10,54\n"
        "3,1,3,20,44\n"
        "3,1,4,30,34\n"
        "3,2,1,0,64\n"
        "3,2,2,10,54\n"
        "3,2,3,20,44\n"
        "3,2,4,30,34\n");
}

TEST_CASE("coarse grids sample only feasible contributions") {
  PggConfig config;
  config.granularity = 8;
  config.rounds = 10;
  config.validate();
  std::vector<ActionDistribution> policies(
      4, ActionDistribution::uniform(config.action_space()));
  wbrl::PggHistory h = wbrl::pgg_episode(policies, config, 5);
  for (const wbrl::PggRound& round : h.rounds) {
    for (int c : round.contributions) {
      CHECK(c % 8 == 0);
      CHECK(c >= 0);
      CHECK(c <= 40);
    }
  }
}

TEST_CASE("mdp validation") {
  wbrl::Rng rng(33);
  FiniteMdp mdp = random_mdp(rng, 4, 3, 0.9);
  CHECK_NOTHROW(mdp.validate());

  FiniteMdp bad = mdp;
  bad.discount = 1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = mdp;
  bad.discount = -0.1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = mdp;
  bad.transition[0] += 0.5;  // row no longer sums to one
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = mdp;
  bad.reward.pop_back();
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("policy evaluation agrees with a direct linear solve") {
  wbrl::Rng rng(34);
  for (double discount : {0.0, 0.5, 0.9, 0.99}) {
    for (int rep = 0; rep < 10; ++rep) {
      const int states = 2 + rng.next_int(5);
      const int actions = 1 + rng.next_int(4);
      FiniteMdp mdp = random_mdp(rng, states, actions, discount);
      std::vector<ActionDistribution> policy;
      for (int s = 0; s < states; ++s) {
        policy.push_back(ActionDistribution(
            ActionSpace(actions), oracles::random_distribution(rng, actions)));
      }
      std::vector<double> iterated = wbrl::evaluate_policy(mdp, policy);
      std::vector<double> solved = solve_policy_value(mdp, policy);
      REQUIRE(iterated.size() == static_cast<std::size_t>(states));
      for (int s = 0; s < states; ++s) {
        CHECK(std::fabs(iterated[s] - solved[s]) <= 1e-7);
      }

      // A state bonus shifts the effective reward.
      std::vector<double> bonus(states);
      for (double& b : bonus) b = rng.next_double() - 0.5;
      std::vector<double> with_bonus = wbrl::evaluate_policy(mdp, policy, bonus);
      std::vector<double> solved_bonus = solve_policy_value(mdp, policy, bonus);
      for (int s = 0; s < states; ++s) {
        CHECK(std::fabs(with_bonus[s] - solved_bonus[s]) <= 1e-7);
      }
    }
  }
}

TEST_CASE("q-values are consistent with state values") {
  wbrl::Rng rng(35);
  FiniteMdp mdp = random_mdp(rng, 5, 3, 0.8);
  std::vector<ActionDistribution> policy;
  for (int s = 0; s < 5; ++s) {
    policy.push_back(ActionDistribution(ActionSpace(3),
                                        oracles::random_distribution(rng, 3)));
  }
  std::vector<double> values = wbrl::evaluate_policy(mdp, policy);
  std::vector<double> q = wbrl::q_values(mdp, values);
  // v(s) must be the policy-average of Q(s, .) at the fixed point.
  for (int s = 0; s < 5; ++s) {
    double avg = 0.0;
    for (int a = 0; a < 3; ++a) avg += policy[s][a] * q[static_cast<std::size_t>(s) * 3 + a];
    CHECK(std::fabs(avg - values[s]) <= 1e-7);
  }
}
