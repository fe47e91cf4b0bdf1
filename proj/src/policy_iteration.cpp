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

#include "wbrl/policy_iteration.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace wbrl {

namespace {

// Signed reward adjustment for one state: entropy is a bonus, the divergence
// kinds are penalties.
double penalty_bonus(const InfoCost& cost, double lambda, const ActionDistribution& policy,
                     const ActionDistribution& prior) {
  double value = cost.evaluate(policy, prior);
  return (cost.kind == InfoCostKind::kEntropy) ? lambda * value : -lambda * value;
}

}  // namespace

RegularizedPolicy regularized_policy_iteration(const FiniteMdp& mdp, const InfoCost& cost,
                                               double lambda,
                                               std::span<const ActionDistribution> priors,
                                               int max_iter, double tol) {
  mdp.validate();
  if (!(lambda >= 0.0)) {
    throw std::invalid_argument("regularized_policy_iteration: lambda must be nonnegative");
  }
  const int S = mdp.state_count;
  const int A = mdp.action_count;
  if (priors.size() != 1 && static_cast<int>(priors.size()) != S) {
    throw std::invalid_argument(
        "regularized_policy_iteration: priors must hold one distribution or one per state");
  }
  auto prior_of = [&priors](int s) -> const ActionDistribution& {
    return priors.size() == 1 ? priors[0] : priors[static_cast<std::size_t>(s)];
  };
  for (int s = 0; s < S; ++s) {
    if (prior_of(s).size() != A) {
      throw std::invalid_argument("regularized_policy_iteration: prior over wrong action count");
    }
  }

  // Start at the priors: always feasible, even for the hard KL cost.
  std::vector<ActionDistribution> policy;
  policy.reserve(static_cast<std::size_t>(S));
  for (int s = 0; s < S; ++s) policy.push_back(prior_of(s));

  RegularizedPolicy result{std::move(policy)};
  std::vector<double> bonus(static_cast<std::size_t>(S), 0.0);
  for (int iter = 0; iter < max_iter; ++iter) {
    for (int s = 0; s < S; ++s) {
      bonus[static_cast<std::size_t>(s)] = penalty_bonus(cost, lambda, result.per_state[static_cast<std::size_t>(s)], prior_of(s));
    }
    std::vector<double> values = evaluate_policy(mdp, result.per_state, bonus);
    std::vector<double> q = q_values(mdp, values);

    double shift = 0.0;
    for (int s = 0; s < S; ++s) {
      std::span<const double> row(q.data() + static_cast<std::size_t>(s) * A, static_cast<std::size_t>(A));
      BestResponse response = regularized_best_response(row, prior_of(s), cost, lambda);
      shift = std::max(shift, response.policy.total_variation(result.per_state[static_cast<std::size_t>(s)]));
      result.per_state[static_cast<std::size_t>(s)] = std::move(response.policy);
    }
    result.iterations = iter + 1;
    if (shift <= tol) {
      result.converged = true;
      break;
    }
  }

  for (int s = 0; s < S; ++s) {
    bonus[static_cast<std::size_t>(s)] = penalty_bonus(cost, lambda, result.per_state[static_cast<std::size_t>(s)], prior_of(s));
  }
  result.values = evaluate_policy(mdp, result.per_state, bonus);
  double total = 0.0;
  for (double v : result.values) total += v;
  result.achieved_objective = total / S;
  return result;
}

}  // namespace wbrl
