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

#ifndef WBRL_PANEL_HPP_
#define WBRL_PANEL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wbrl/distribution.hpp"

namespace wbrl {

// One subject-round observation of a contribution, in tokens.
struct PanelRecord {
  int subject = 0;
  int group = 0;
  int round = 0;  // 1-indexed
  int contribution = 0;
};

// Long-format contribution data, either loaded from experiments or generated
// synthetically. Contributions live on the integer grid 0..endowment.
struct ContributionPanel {
  int endowment = 40;
  std::vector<PanelRecord> records;

  ActionSpace action_space() const { return ActionSpace(endowment + 1); }
  int max_round() const;
  std::vector<int> subjects() const;  // sorted, unique

  // Bounds, round positivity, and (subject, round) uniqueness.
  void validate() const;
  std::string to_csv() const;  // header subject,group,round,contribution
};

// Parses the subject,group,round,contribution CSV schema. Malformed input is
// rejected with the 1-based line number; an empty panel is an error.
ContributionPanel panel_from_csv(const std::string& text, int endowment = 40);
ContributionPanel load_panel(const std::string& path, int endowment = 40);

// Empirical contribution frequency over rounds 1..up_to_round, pooled across
// subjects or restricted to one. Errors when no record qualifies.
ActionDistribution historical_policy(const ContributionPanel& panel, int up_to_round,
                                     std::optional<int> subject = std::nullopt);

// Synthetic panel generators standing in for experimental data.
//   kRational:    every contribution 0.
//   kIidUniform:  contributions drawn uniformly from 0..endowment.
//   kStickyDrift: a proportional pull toward 0 (rate `decay`) plus small
//                 symmetric noise (scale `step_scale`), clamped to range;
//                 most steps are small, increases happen.
struct SynthSpec {
  enum class Kind { kRational, kIidUniform, kStickyDrift };
  Kind kind = Kind::kStickyDrift;
  double decay = 0.05;
  double step_scale = 1.5;

  // "rational" | "iidUniform" | "stickyDrift[:decay[:stepScale]]"
  static SynthSpec parse(const std::string& text);
  std::string str() const;
};

ContributionPanel synth_panel(const SynthSpec& spec, int subjects, int rounds, std::uint64_t seed,
                              int endowment = 40);

}  // namespace wbrl

#endif  // WBRL_PANEL_HPP_
