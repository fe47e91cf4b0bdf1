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

#include "wbrl/change_stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "wbrl/text.hpp"

namespace wbrl {

int ChangeStats::delta_count(int delta) const {
  int endowment = size - 1;
  if (delta < -endowment || delta > endowment) return 0;
  return delta_histogram[static_cast<std::size_t>(delta + endowment)];
}

int ChangeStats::transition_count(int from, int to) const {
  return transition_counts[static_cast<std::size_t>(from) * size + to];
}

std::string ChangeStats::delta_histogram_csv() const {
  std::string out = "delta,count\n";
  int endowment = size - 1;
  for (int k = 0; k < static_cast<int>(delta_histogram.size()); ++k) {
    out += std::to_string(k - endowment);
    out += ',';
    out += std::to_string(delta_histogram[static_cast<std::size_t>(k)]);
    out += '\n';
  }
  return out;
}

std::string ChangeStats::abs_delta_histogram_csv() const {
  std::string out = "absDelta,count\n";
  for (int k = 0; k < static_cast<int>(abs_delta_histogram.size()); ++k) {
    out += std::to_string(k);
    out += ',';
    out += std::to_string(abs_delta_histogram[static_cast<std::size_t>(k)]);
    out += '\n';
  }
  return out;
}

std::string ChangeStats::transitions_csv() const {
  std::string out = "from,to,count\n";
  for (int from = 0; from < size; ++from) {
    for (int to = 0; to < size; ++to) {
      int count = transition_count(from, to);
      if (count == 0) continue;
      out += std::to_string(from);
      out += ',';
      out += std::to_string(to);
      out += ',';
      out += std::to_string(count);
      out += '\n';
    }
  }
  return out;
}

std::string ChangeStats::phase_csv() const {
  std::string out = "level,steps,meanDelta\n";
  for (int level = 0; level < size; ++level) {
    out += std::to_string(level);
    out += ',';
    out += std::to_string(phase_counts[static_cast<std::size_t>(level)]);
    out += ',';
    out += format_double(phase_mean_delta[static_cast<std::size_t>(level)]);
    out += '\n';
  }
  return out;
}

std::string ChangeStats::summary_csv() const {
  std::string out = "totalSteps,threshold,stickinessFraction\n";
  out += std::to_string(total_steps);
  out += ',';
  out += std::to_string(stickiness_threshold);
  out += ',';
  out += format_double(stickiness_fraction);
  out += '\n';
  return out;
}

ChangeStats change_stats(const ContributionPanel& panel, int stickiness_threshold) {
  panel.validate();
  if (stickiness_threshold < 1) {
    throw std::invalid_argument("change_stats: threshold must be positive");
  }
  const int size = panel.endowment + 1;

  // subject -> (round -> contribution)
  std::map<int, std::map<int, int>> by_subject;
  for (const PanelRecord& r : panel.records) by_subject[r.subject][r.round] = r.contribution;

  ChangeStats stats;
  stats.size = size;
  stats.stickiness_threshold = stickiness_threshold;
  stats.delta_histogram.assign(static_cast<std::size_t>(2 * size - 1), 0);
  stats.abs_delta_histogram.assign(static_cast<std::size_t>(size), 0);
  stats.transition_counts.assign(static_cast<std::size_t>(size) * size, 0);
  stats.phase_counts.assign(static_cast<std::size_t>(size), 0);
  std::vector<double> phase_sum(static_cast<std::size_t>(size), 0.0);

  int sticky = 0;
  for (const auto& [subject, rounds] : by_subject) {
    for (const auto& [round, contribution] : rounds) {
      auto next = rounds.find(round + 1);
      if (next == rounds.end()) continue;
      int from = contribution;
      int to = next->second;
      int delta = to - from;
      ++stats.total_steps;
      ++stats.delta_histogram[static_cast<std::size_t>(delta + size - 1)];
      ++stats.abs_delta_histogram[static_cast<std::size_t>(std::abs(delta))];
      ++stats.transition_counts[static_cast<std::size_t>(from) * size + to];
      ++stats.phase_counts[static_cast<std::size_t>(from)];
      phase_sum[static_cast<std::size_t>(from)] += delta;
      if (std::abs(delta) < stickiness_threshold) ++sticky;
    }
  }
  if (stats.total_steps == 0) {
    throw std::invalid_argument("change_stats: no consecutive-round steps in the panel");
  }
  stats.phase_mean_delta.assign(static_cast<std::size_t>(size), 0.0);
  for (int level = 0; level < size; ++level) {
    if (stats.phase_counts[static_cast<std::size_t>(level)] > 0) {
      stats.phase_mean_delta[static_cast<std::size_t>(level)] =
          phase_sum[static_cast<std::size_t>(level)] / stats.phase_counts[static_cast<std::size_t>(level)];
    }
  }
  stats.stickiness_fraction = static_cast<double>(sticky) / stats.total_steps;
  return stats;
}

}  // namespace wbrl
