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

#include "wbrl/mdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wbrl {

void FiniteMdp::validate() const {
  if (state_count < 1 || action_count < 1) {
    throw std::invalid_argument("FiniteMdp: state_count and action_count must be positive");
  }
  if (!(discount >= 0.0) || !(discount < 1.0)) {
    throw std::invalid_argument("FiniteMdp: discount must lie in [0, 1)");
  }
  std::size_t want_t = static_cast<std::size_t>(state_count) * action_count * state_count;
  std::size_t want_r = static_cast<std::size_t>(state_count) * action_count;
  if (transition.size() != want_t) {
    throw std::invalid_argument("FiniteMdp: transition table has wrong size");
  }
  if (reward.size() != want_r) {
    throw std::invalid_argument("FiniteMdp: reward table has wrong size");
  }
  for (int s = 0; s < state_count; ++s) {
    for (int a = 0; a < action_count; ++a) {
      double sum = 0.0;
      for (int s2 = 0; s2 < state_count; ++s2) {
        double p = transition_at(s, a, s2);
        if (!std::isfinite(p) || p < 0.0) {
          throw std::invalid_argument("FiniteMdp: transition entries must be finite and nonnegative");
        }
        sum += p;
      }
      if (std::abs(sum - 1.0) > kNormalizationTolerance) {
        throw std::invalid_argument("FiniteMdp: transition row (" + std::to_string(s) + ", " +
                                    std::to_string(a) + ") sums to an invalid total");
      }
    }
  }
}

std::vector<double> evaluate_policy(const FiniteMdp& mdp,
                                    std::span<const ActionDistribution> policy,
                                    std::span<const double> state_bonus, double tol) {
  if (static_cast<int>(policy.size()) != mdp.state_count) {
    throw std::invalid_argument("evaluate_policy: one policy row per state required");
  }
  if (!state_bonus.empty() && static_cast<int>(state_bonus.size()) != mdp.state_count) {
    throw std::invalid_argument("evaluate_policy: state_bonus size mismatch");
  }
  const int S = mdp.state_count;
  const int A = mdp.action_count;

  // Collapse the policy once: r_pi[s] and P_pi[s][s2].
  std::vector<double> r_pi(static_cast<std::size_t>(S), 0.0);
  std::vector<double> p_pi(static_cast<std::size_t>(S) * S, 0.0);
  for (int s = 0; s < S; ++s) {
    const ActionDistribution& row = policy[static_cast<std::size_t>(s)];
    if (row.size() != A) {
      throw std::invalid_argument("evaluate_policy: policy row over wrong action count");
    }
    for (int a = 0; a < A; ++a) {
      double w = row[a];
      if (w == 0.0) continue;
      r_pi[static_cast<std::size_t>(s)] += w * mdp.reward_at(s, a);
      for (int s2 = 0; s2 < S; ++s2) {
        p_pi[static_cast<std::size_t>(s) * S + s2] += w * mdp.transition_at(s, a, s2);
      }
    }
    if (!state_bonus.empty()) r_pi[static_cast<std::size_t>(s)] += state_bonus[static_cast<std::size_t>(s)];
  }

  std::vector<double> v(static_cast<std::size_t>(S), 0.0);
  std::vector<double> next(static_cast<std::size_t>(S), 0.0);
  // Contraction with modulus `discount`: stop when the sup-norm step implies
  // the fixed point is within tol.
  double slack = (mdp.discount > 0.0) ? tol * (1.0 - mdp.discount) / mdp.discount
                                      : std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 1000000; ++iter) {
    double delta = 0.0;
    for (int s = 0; s < S; ++s) {
      double x = r_pi[static_cast<std::size_t>(s)];
      for (int s2 = 0; s2 < S; ++s2) {
        x += mdp.discount * p_pi[static_cast<std::size_t>(s) * S + s2] * v[static_cast<std::size_t>(s2)];
      }
      next[static_cast<std::size_t>(s)] = x;
      delta = std::max(delta, std::abs(x - v[static_cast<std::size_t>(s)]));
    }
    v.swap(next);
    if (delta <= slack) break;
  }
  return v;
}

std::vector<double> q_values(const FiniteMdp& mdp, std::span<const double> values) {
  if (static_cast<int>(values.size()) != mdp.state_count) {
    throw std::invalid_argument("q_values: one value per state required");
  }
  const int S = mdp.state_count;
  const int A = mdp.action_count;
  std::vector<double> q(static_cast<std::size_t>(S) * A, 0.0);
  for (int s = 0; s < S; ++s) {
    for (int a = 0; a < A; ++a) {
      double x = mdp.reward_at(s, a);
      for (int s2 = 0; s2 < S; ++s2) {
        x += mdp.discount * mdp.transition_at(s, a, s2) * values[static_cast<std::size_t>(s2)];
      }
      q[static_cast<std::size_t>(s) * A + a] = x;
    }
  }
  return q;
}

}  // namespace wbrl
