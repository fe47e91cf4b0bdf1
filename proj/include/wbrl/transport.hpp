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

#ifndef WBRL_TRANSPORT_HPP_
#define WBRL_TRANSPORT_HPP_

#include <vector>

#include "wbrl/distribution.hpp"
#include "wbrl/ground_cost.hpp"

namespace wbrl {

// Solution of min_T <C, T> with row sums equal to the target distribution and
// column sums equal to the source distribution. `plan` is row-major
// size*size; row i is the mass of target action i broken down by source
// action. Duals are Kantorovich potentials normalized so dual_target[0] == 0.
struct OtSolution {
  double distance = 0.0;
  std::vector<double> plan;
  std::vector<double> dual_target;
  std::vector<double> dual_source;
  int iterations = 0;
  bool converged = false;

  double dual_objective(const ActionDistribution& target, const ActionDistribution& source) const;
  // max_j |colsum_j - source_j| and max_i |rowsum_i - target_i|, the larger.
  double marginal_violation(const ActionDistribution& target, const ActionDistribution& source) const;
};

// Transportation simplex. Marginals are perturbed internally to steer pivots
// away from degenerate ties; the returned plan and duals are exact for the
// unperturbed inputs (the final basis is re-solved against the true
// marginals, with dual-simplex cleanup if the perturbation made it
// infeasible). `converged` is false only if the pivot cap was hit.
OtSolution wasserstein_exact(const ActionDistribution& target, const ActionDistribution& source,
                             const CostMatrix& cost);

// W1 on the line with unit-spaced atoms: sum_k |CDF_target(k) - CDF_source(k)|.
// Matches wasserstein_exact for the absolute ground distance at order 1.
double wasserstein_1d_closed_form(const ActionDistribution& target,
                                  const ActionDistribution& source);

struct SinkhornOptions {
  double reg = 1e-2;        // final entropic regularization strength
  int max_iter = 50000;     // total update sweeps across all stages
  double tol = 1e-9;        // L1 marginal violation target
  bool eps_scaling = true;  // anneal reg from max cost down to `reg`
};

// Entropy-regularized approximation, log-domain updates. The returned plan is
// rounded onto the transport polytope, so marginals hold to machine
// precision; the distance then overshoots the exact one by at most
// reg * log(size) plus the residual marginal violation times the cost range.
// Duals are the regularized potentials, not LP duals.
OtSolution sinkhorn_approx(const ActionDistribution& target, const ActionDistribution& source,
                           const CostMatrix& cost, const SinkhornOptions& options = {});

}  // namespace wbrl

#endif  // WBRL_TRANSPORT_HPP_
