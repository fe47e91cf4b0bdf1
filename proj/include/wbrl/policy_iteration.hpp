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

#ifndef WBRL_POLICY_ITERATION_HPP_
#define WBRL_POLICY_ITERATION_HPP_

#include <span>
#include <vector>

#include "wbrl/best_response.hpp"
#include "wbrl/mdp.hpp"

namespace wbrl {

struct RegularizedPolicy {
  std::vector<ActionDistribution> per_state;
  std::vector<double> values;        // penalized per-state values of the final policy
  double achieved_objective = 0.0;   // mean of `values` (uniform start-state weight)
  int iterations = 0;
  bool converged = false;
};

// Alternates penalized policy evaluation (the per-state cost enters the
// one-step reward, scaled by -lambda; the entropy kind enters as a +lambda
// bonus) with a per-state regularized best response on the Q-values. Stops
// when no state policy moves by more than `tol` in total variation.
//
// `priors` holds either one distribution (shared by every state) or one per
// state.
RegularizedPolicy regularized_policy_iteration(const FiniteMdp& mdp, const InfoCost& cost,
                                               double lambda,
                                               std::span<const ActionDistribution> priors,
                                               int max_iter = 500, double tol = 1e-9);

}  // namespace wbrl

#endif  // WBRL_POLICY_ITERATION_HPP_
