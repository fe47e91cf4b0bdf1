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

#include "wbrl/best_response.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace wbrl {

void PenaltyConfig::validate() const {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("PenaltyConfig: lambda must be finite and nonnegative");
  }
}

namespace {

void check_inputs(std::span<const double> utilities, const ActionDistribution& prior,
                  double lambda) {
  if (utilities.size() != static_cast<std::size_t>(prior.size())) {
    throw std::invalid_argument("regularized_best_response: one utility per action required");
  }
  for (double u : utilities) {
    if (!std::isfinite(u)) {
      throw std::invalid_argument("regularized_best_response: utilities must be finite");
    }
  }
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("regularized_best_response: lambda must be finite and nonnegative");
  }
}

int argmax_lowest(std::span<const double> values) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(values.size()); ++i) {
    if (values[static_cast<std::size_t>(i)] > values[static_cast<std::size_t>(best)]) best = i;
  }
  return best;
}

// Argmax restricted to indices with positive prior mass.
int argmax_supported(std::span<const double> values, const ActionDistribution& prior) {
  int best = -1;
  for (int i = 0; i < static_cast<int>(values.size()); ++i) {
    if (prior[i] <= 0.0) continue;
    if (best < 0 || values[static_cast<std::size_t>(i)] > values[static_cast<std::size_t>(best)]) best = i;
  }
  return best;
}

double inner(std::span<const double> utilities, const ActionDistribution& policy) {
  double s = 0.0;
  for (int i = 0; i < policy.size(); ++i) s += utilities[static_cast<std::size_t>(i)] * policy[i];
  return s;
}

// pi_i proportional to exp(weights_i); weights may hold -infinity.
ActionDistribution gibbs(const ActionSpace& space, std::span<const double> weights) {
  double top = -std::numeric_limits<double>::infinity();
  for (double w : weights) top = std::max(top, w);
  std::vector<double> mass(weights.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    mass[i] = std::exp(weights[i] - top);
    sum += mass[i];
  }
  for (double& m : mass) m /= sum;
  return ActionDistribution(space, std::move(mass));
}

}  // namespace

BestResponse regularized_best_response(std::span<const double> utilities,
                                       const ActionDistribution& prior, const InfoCost& cost,
                                       double lambda) {
  check_inputs(utilities, prior, lambda);
  const int n = prior.size();
  const ActionSpace& space = prior.space();

  bool excluded = false;
  if (cost.kind == InfoCostKind::kKl) {
    int global = argmax_lowest(utilities);
    int supported = argmax_supported(utilities, prior);
    excluded = utilities[static_cast<std::size_t>(supported)] <
               utilities[static_cast<std::size_t>(global)];
  }

  if (lambda == 0.0) {
    // Penalty vanishes; the cost kind only matters through feasibility: the
    // hard KL cost confines the policy to the prior's support.
    int pick = (cost.kind == InfoCostKind::kKl) ? argmax_supported(utilities, prior)
                                                : argmax_lowest(utilities);
    BestResponse response{ActionDistribution::dirac(space, pick)};
    response.info_cost = cost.evaluate(response.policy, prior);
    if (std::isinf(response.info_cost)) response.info_cost = 0.0;  // 0 * inf reading of the limit
    response.objective = inner(utilities, response.policy);
    response.optimum_excluded = excluded;
    return response;
  }

  switch (cost.kind) {
    case InfoCostKind::kEntropy: {
      std::vector<double> weights(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) weights[static_cast<std::size_t>(i)] = utilities[static_cast<std::size_t>(i)] / lambda;
      BestResponse response{gibbs(space, weights)};
      response.info_cost = entropy(response.policy);
      response.objective = inner(utilities, response.policy) + lambda * response.info_cost;
      return response;
    }
    case InfoCostKind::kKl:
    case InfoCostKind::kKlStar: {
      std::vector<double> reference(prior.mass());
      if (cost.kind == InfoCostKind::kKlStar) {
        for (double& m : reference) m = std::max(m, cost.kl_star_epsilon);
      }
      std::vector<double> weights(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        double r = reference[static_cast<std::size_t>(i)];
        weights[static_cast<std::size_t>(i)] =
            (r > 0.0) ? std::log(r) + utilities[static_cast<std::size_t>(i)] / lambda
                      : -std::numeric_limits<double>::infinity();
      }
      BestResponse response{gibbs(space, weights)};
      response.info_cost = cost.evaluate(response.policy, prior);
      response.objective = inner(utilities, response.policy) - lambda * response.info_cost;
      response.optimum_excluded = excluded;
      return response;
    }
    case InfoCostKind::kWasserstein: {
      if (cost.ot.take_root && cost.ot.ground.order > 1) {
        throw std::invalid_argument(
            "regularized_best_response: the column decomposition optimizes the raw plan "
            "objective; rooted distances are not supported");
      }
      CostMatrix ground(n, cost.ot.ground);
      std::vector<double> mass(static_cast<std::size_t>(n), 0.0);
      std::vector<double> plan(static_cast<std::size_t>(n) * n, 0.0);
      double transport = 0.0;
      for (int j = 0; j < n; ++j) {
        if (prior[j] == 0.0) continue;
        int best = 0;
        double best_value = utilities[0] - lambda * ground.at(0, j);
        for (int i = 1; i < n; ++i) {
          double value = utilities[static_cast<std::size_t>(i)] - lambda * ground.at(i, j);
          if (value > best_value) {
            best_value = value;
            best = i;
          }
        }
        mass[static_cast<std::size_t>(best)] += prior[j];
        plan[static_cast<std::size_t>(best) * n + j] = prior[j];
        transport += prior[j] * ground.at(best, j);
      }
      BestResponse response{ActionDistribution(space, std::move(mass))};
      // The plan is optimal for the returned policy, so its cost is the exact
      // transport cost, not just an upper bound.
      response.info_cost = transport;
      response.objective = inner(utilities, response.policy) - lambda * transport;
      response.plan = std::move(plan);
      return response;
    }
  }
  throw std::logic_error("regularized_best_response: unknown cost kind");
}

}  // namespace wbrl
