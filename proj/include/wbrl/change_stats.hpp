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

#ifndef WBRL_CHANGE_STATS_HPP_
#define WBRL_CHANGE_STATS_HPP_

#include <string>
#include <vector>

#include "wbrl/panel.hpp"

namespace wbrl {

// Round-to-round contribution dynamics of a panel. A step is a pair of
// consecutive rounds (t, t+1) of the same subject; delta = c_{t+1} - c_t.
struct ChangeStats {
  int size = 0;               // endowment + 1 contribution levels
  int stickiness_threshold = 5;
  int total_steps = 0;

  std::vector<int> delta_histogram;      // index k counts delta == k - endowment
  std::vector<int> abs_delta_histogram;  // index k counts |delta| == k
  std::vector<int> transition_counts;    // size*size, row c_t, column c_{t+1}
  std::vector<int> phase_counts;         // steps out of each level
  std::vector<double> phase_mean_delta;  // mean delta out of each level; 0 when empty
  double stickiness_fraction = 0.0;      // share of steps with |delta| < threshold

  int delta_count(int delta) const;
  int transition_count(int from, int to) const;

  // CSV emitters, one table each.
  std::string delta_histogram_csv() const;       // delta,count
  std::string abs_delta_histogram_csv() const;   // absDelta,count
  std::string transitions_csv() const;           // from,to,count (nonzero cells)
  std::string phase_csv() const;                 // level,steps,meanDelta
  std::string summary_csv() const;               // totalSteps,threshold,stickinessFraction
};

ChangeStats change_stats(const ContributionPanel& panel, int stickiness_threshold = 5);

}  // namespace wbrl

#endif  // WBRL_CHANGE_STATS_HPP_
