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

#ifndef WBRL_BEST_RESPONSE_HPP_
#define WBRL_BEST_RESPONSE_HPP_

#include <span>
#include <vector>

#include "wbrl/distribution.hpp"
#include "wbrl/info_costs.hpp"

namespace wbrl {

// Whether the reference distribution stays fixed across rounds or tracks the
// agent's own realized action frequency.
enum class PriorSchedule { kFixed, kPreviousPolicy };

struct PenaltyConfig {
  double lambda = 1.0;
  InfoCost cost;
  PriorSpec prior;
  PriorSchedule schedule = PriorSchedule::kFixed;

  void validate() const;
};

struct BestResponse {
  ActionDistribution policy;
  double objective = 0.0;  // <utilities, policy> less lambda times the cost
  double info_cost = 0.0;  // the cost term of the returned policy
  // Transport plan behind the policy (row-major, rows = policy, cols =
  // prior); only filled for the transport cost at lambda > 0.
  std::vector<double> plan;
  // True when every maximizer of the raw utilities lies outside the prior's
  // support under the hard KL cost, so the unpenalized optimum is
  // unreachable and the returned policy is the limiting magnet form.
  bool optimum_excluded = false;
};

// Maximizes <utilities, pi> - lambda * I(pi, prior) over distributions pi.
//
// Closed forms per cost kind:
//   entropy      exp(utilities / lambda), normalized. The entropy term enters
//                as a bonus: high-entropy policies are the cheap ones, so the
//                maximized objective is <U, pi> + lambda * H(pi).
//   kl, klstar   pi proportional to q~ * exp(utilities / lambda), q~ the
//                (smoothed) prior.
//   wasserstein  each prior atom j moves wholesale to
//                argmax_i (utilities[i] - lambda * C[i][j]); exact because
//                the joint problem over (pi, plan) decouples per column.
// lambda = 0 returns the Dirac at the utility argmax (lowest index on ties;
// restricted to the prior's support for the hard KL cost).
BestResponse regularized_best_response(std::span<const double> utilities,
                                       const ActionDistribution& prior, const InfoCost& cost,
                                       double lambda);

inline BestResponse regularized_best_response(std::span<const double> utilities,
                                              const ActionDistribution& prior,
                                              const PenaltyConfig& config) {
  return regularized_best_response(utilities, prior, config.cost, config.lambda);
}

}  // namespace wbrl

#endif  // WBRL_BEST_RESPONSE_HPP_
