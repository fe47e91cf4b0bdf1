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

#ifndef WBRL_MDP_HPP_
#define WBRL_MDP_HPP_

#include <span>
#include <vector>

#include "wbrl/distribution.hpp"

namespace wbrl {

// Tabular MDP with dense transitions. transition[(s * action_count + a) *
// state_count + s2] is P(s2 | s, a); reward[s * action_count + a] is the
// expected one-step utility.
struct FiniteMdp {
  int state_count = 1;
  int action_count = 1;
  std::vector<double> transition;
  std::vector<double> reward;
  double discount = 0.9;

  double transition_at(int s, int a, int s2) const {
    return transition[(static_cast<std::size_t>(s) * action_count + a) * state_count + s2];
  }
  double reward_at(int s, int a) const {
    return reward[static_cast<std::size_t>(s) * action_count + a];
  }

  // Rejects discount outside [0, 1), malformed transition rows, size
  // mismatches.
  void validate() const;
};

inline constexpr double kValueTolerance = 1e-9;

// Discounted expected return per state under a per-state policy, iterated to
// within `tol` of the fixed point. `state_bonus`, when non-empty, is added to
// the expected one-step reward of each state (the hook used for penalized
// evaluation).
std::vector<double> evaluate_policy(const FiniteMdp& mdp,
                                    std::span<const ActionDistribution> policy,
                                    std::span<const double> state_bonus = {},
                                    double tol = kValueTolerance);

// Q(s, a) = reward(s, a) + discount * sum_s2 P(s2|s,a) values[s2].
std::vector<double> q_values(const FiniteMdp& mdp, std::span<const double> values);

}  // namespace wbrl

#endif  // WBRL_MDP_HPP_
