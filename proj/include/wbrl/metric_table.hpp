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

#ifndef WBRL_METRIC_TABLE_HPP_
#define WBRL_METRIC_TABLE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "wbrl/info_costs.hpp"
#include "wbrl/panel.hpp"

namespace wbrl {

// One metric value for one (round, prior) cell. value may be +infinity
// (serialized as "inf"); that is the point of the comparison.
struct MetricRow {
  int round = 0;
  std::string prior;   // uniform | previousPolicy | optimalDirac
  std::string metric;  // entropy | kl | klstar | wasserstein
  double value = 0.0;
};

struct MetricReport {
  std::vector<MetricRow> rows;

  // Header round,prior,metric,value; infinities as the "inf" literal.
  std::string to_csv() const;
  std::optional<double> find(int round, const std::string& prior, const std::string& metric) const;
};

struct MetricTableOptions {
  std::optional<int> subject;  // default: pool every subject's contributions
  double kl_star_epsilon = kDefaultKlStarEpsilon;
  OtCostConfig ot;        // ground cost for the transport metric
  int optimal_index = 0;  // atom of the optimalDirac prior
};

// For every round t >= 2: the policy is the pooled (or per-subject)
// historical frequency through t; priors are uniform, the t-1 policy, and a
// Dirac at `optimal_index`. Every (prior, metric) pair is evaluated,
// including raw KL, whose infinities against thin priors are the headline
// contrast.
MetricReport metric_table(const ContributionPanel& panel, const MetricTableOptions& options = {});

}  // namespace wbrl

#endif  // WBRL_METRIC_TABLE_HPP_
