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

#include "wbrl/metric_table.hpp"

#include <stdexcept>

#include "wbrl/text.hpp"

namespace wbrl {

std::string MetricReport::to_csv() const {
  std::string out = "round,prior,metric,value\n";
  for (const MetricRow& row : rows) {
    out += std::to_string(row.round);
    out += ',';
    out += row.prior;
    out += ',';
    out += row.metric;
    out += ',';
    out += format_double(row.value);
    out += '\n';
  }
  return out;
}

std::optional<double> MetricReport::find(int round, const std::string& prior,
                                         const std::string& metric) const {
  for (const MetricRow& row : rows) {
    if (row.round == round && row.prior == prior && row.metric == metric) return row.value;
  }
  return std::nullopt;
}

MetricReport metric_table(const ContributionPanel& panel, const MetricTableOptions& options) {
  panel.validate();
  const int last_round = panel.max_round();
  if (last_round < 2) {
    throw std::invalid_argument("metric_table: need at least two rounds of data");
  }
  const ActionSpace space = panel.action_space();
  if (options.optimal_index < 0 || options.optimal_index >= space.size) {
    throw std::invalid_argument("metric_table: optimal_index outside the action range");
  }
  const ActionDistribution uniform = ActionDistribution::uniform(space);
  const ActionDistribution optimal = ActionDistribution::dirac(space, options.optimal_index);

  MetricReport report;
  for (int t = 2; t <= last_round; ++t) {
    const ActionDistribution policy = historical_policy(panel, t, options.subject);
    const ActionDistribution previous = historical_policy(panel, t - 1, options.subject);
    const struct {
      const char* name;
      const ActionDistribution& dist;
    } priors[] = {{"uniform", uniform}, {"previousPolicy", previous}, {"optimalDirac", optimal}};
    for (const auto& prior : priors) {
      report.rows.push_back({t, prior.name, "entropy", entropy(policy)});
      report.rows.push_back({t, prior.name, "kl", kl_divergence(policy, prior.dist)});
      report.rows.push_back(
          {t, prior.name, "klstar", kl_star(policy, prior.dist, options.kl_star_epsilon)});
      report.rows.push_back(
          {t, prior.name, "wasserstein", wasserstein_cost(policy, prior.dist, options.ot)});
    }
  }
  return report;
}

}  // namespace wbrl
