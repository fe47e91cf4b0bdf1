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

#include "wbrl/panel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "wbrl/rng.hpp"
#include "wbrl/text.hpp"

namespace wbrl {

int ContributionPanel::max_round() const {
  int m = 0;
  for (const PanelRecord& r : records) m = std::max(m, r.round);
  return m;
}

std::vector<int> ContributionPanel::subjects() const {
  std::set<int> unique;
  for (const PanelRecord& r : records) unique.insert(r.subject);
  return std::vector<int>(unique.begin(), unique.end());
}

void ContributionPanel::validate() const {
  if (endowment <= 0) throw std::invalid_argument("ContributionPanel: endowment must be positive");
  std::set<std::pair<int, int>> seen;
  for (const PanelRecord& r : records) {
    if (r.round < 1) {
      throw std::invalid_argument("ContributionPanel: rounds are 1-indexed, got " +
                                  std::to_string(r.round));
    }
    if (r.contribution < 0 || r.contribution > endowment) {
      throw std::invalid_argument("ContributionPanel: contribution " +
                                  std::to_string(r.contribution) + " outside [0, " +
                                  std::to_string(endowment) + "]");
    }
    if (!seen.insert({r.subject, r.round}).second) {
      throw std::invalid_argument("ContributionPanel: duplicate (subject, round) = (" +
                                  std::to_string(r.subject) + ", " + std::to_string(r.round) + ")");
    }
  }
}

std::string ContributionPanel::to_csv() const {
  std::string out = "subject,group,round,contribution\n";
  for (const PanelRecord& r : records) {
    out += std::to_string(r.subject);
    out += ',';
    out += std::to_string(r.group);
    out += ',';
    out += std::to_string(r.round);
    out += ',';
    out += std::to_string(r.contribution);
    out += '\n';
  }
  return out;
}

namespace {

int parse_int_field(std::string_view field, const char* name, int line) {
  try {
    std::size_t used = 0;
    std::string text(trim(field));
    int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("panel_from_csv: line " + std::to_string(line) + ": bad " +
                                std::string(name) + " \"" + std::string(field) + "\"");
  }
}

}  // namespace

ContributionPanel panel_from_csv(const std::string& text, int endowment) {
  std::vector<std::string> lines = split(text, '\n');
  // Tolerate a trailing newline.
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) {
    throw std::invalid_argument("panel_from_csv: empty input");
  }
  std::vector<std::string> header = split(lines[0], ',');
  const char* expected[] = {"subject", "group", "round", "contribution"};
  if (header.size() != 4) {
    throw std::invalid_argument("panel_from_csv: expected header subject,group,round,contribution");
  }
  for (int k = 0; k < 4; ++k) {
    if (!iequals(trim(header[static_cast<std::size_t>(k)]), expected[k])) {
      throw std::invalid_argument("panel_from_csv: expected header column \"" +
                                  std::string(expected[k]) + "\", got \"" +
                                  std::string(header[static_cast<std::size_t>(k)]) + "\"");
    }
  }
  ContributionPanel panel;
  panel.endowment = endowment;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    int line = static_cast<int>(k) + 1;
    if (trim(lines[k]).empty()) continue;
    std::vector<std::string> fields = split(lines[k], ',');
    if (fields.size() != 4) {
      throw std::invalid_argument("panel_from_csv: line " + std::to_string(line) +
                                  ": expected 4 fields, got " + std::to_string(fields.size()));
    }
    PanelRecord r;
    r.subject = parse_int_field(fields[0], "subject", line);
    r.group = parse_int_field(fields[1], "group", line);
    r.round = parse_int_field(fields[2], "round", line);
    r.contribution = parse_int_field(fields[3], "contribution", line);
    if (r.round < 1) {
      throw std::invalid_argument("panel_from_csv: line " + std::to_string(line) +
                                  ": rounds are 1-indexed");
    }
    if (r.contribution < 0 || r.contribution > endowment) {
      throw std::invalid_argument("panel_from_csv: line " + std::to_string(line) +
                                  ": contribution " + std::to_string(r.contribution) +
                                  " outside [0, " + std::to_string(endowment) + "]");
    }
    panel.records.push_back(r);
  }
  if (panel.records.empty()) {
    throw std::invalid_argument("panel_from_csv: no data rows");
  }
  panel.validate();
  return panel;
}

ContributionPanel load_panel(const std::string& path, int endowment) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("load_panel: cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return panel_from_csv(buffer.str(), endowment);
}

ActionDistribution historical_policy(const ContributionPanel& panel, int up_to_round,
                                     std::optional<int> subject) {
  if (up_to_round < 1) {
    throw std::invalid_argument("historical_policy: up_to_round must be >= 1");
  }
  std::vector<int> actions;
  for (const PanelRecord& r : panel.records) {
    if (r.round > up_to_round) continue;
    if (subject.has_value() && r.subject != *subject) continue;
    actions.push_back(r.contribution);
  }
  if (actions.empty()) {
    throw std::invalid_argument("historical_policy: no contributions at or before round " +
                                std::to_string(up_to_round));
  }
  return ActionDistribution::from_history(panel.action_space(), actions);
}

SynthSpec SynthSpec::parse(const std::string& text) {
  std::vector<std::string> parts = split(text, ':');
  if (parts.empty() || parts[0].empty()) {
    throw std::invalid_argument("SynthSpec::parse: empty generator string");
  }
  std::string head(trim(parts[0]));
  SynthSpec spec;
  if (iequals(head, "rational")) {
    spec.kind = Kind::kRational;
    if (parts.size() > 1) throw std::invalid_argument("SynthSpec::parse: rational takes no arguments");
    return spec;
  }
  if (iequals(head, "iidUniform")) {
    spec.kind = Kind::kIidUniform;
    if (parts.size() > 1) throw std::invalid_argument("SynthSpec::parse: iidUniform takes no arguments");
    return spec;
  }
  if (iequals(head, "stickyDrift")) {
    spec.kind = Kind::kStickyDrift;
    if (parts.size() > 3) throw std::invalid_argument("SynthSpec::parse: too many stickyDrift arguments");
    if (parts.size() >= 2) spec.decay = parse_double(trim(parts[1]));
    if (parts.size() == 3) spec.step_scale = parse_double(trim(parts[2]));
    if (!(spec.decay >= 0.0) || !(spec.decay <= 1.0)) {
      throw std::invalid_argument("SynthSpec::parse: decay must lie in [0, 1]");
    }
    if (!(spec.step_scale >= 0.0)) {
      throw std::invalid_argument("SynthSpec::parse: stepScale must be nonnegative");
    }
    return spec;
  }
  throw std::invalid_argument("SynthSpec::parse: unknown generator \"" + head +
                              "\" (expected rational, iidUniform, or stickyDrift)");
}

std::string SynthSpec::str() const {
  switch (kind) {
    case Kind::kRational:
      return "rational";
    case Kind::kIidUniform:
      return "iidUniform";
    case Kind::kStickyDrift:
      return "stickyDrift:" + format_double(decay) + ":" + format_double(step_scale);
  }
  throw std::logic_error("SynthSpec::str: unknown enum value");
}

ContributionPanel synth_panel(const SynthSpec& spec, int subjects, int rounds, std::uint64_t seed,
                              int endowment) {
  if (subjects < 1 || rounds < 1) {
    throw std::invalid_argument("synth_panel: subjects and rounds must be positive");
  }
  if (endowment <= 0) {
    throw std::invalid_argument("synth_panel: endowment must be positive");
  }
  ContributionPanel panel;
  panel.endowment = endowment;
  panel.records.reserve(static_cast<std::size_t>(subjects) * rounds);
  Rng base(seed);
  for (int s = 1; s <= subjects; ++s) {
    // Per-subject streams keep subjects independent of enumeration order.
    Rng rng = base.fork(static_cast<std::uint64_t>(s));
    int group = (s - 1) / 4 + 1;
    int level = endowment / 2;
    for (int t = 1; t <= rounds; ++t) {
      int contribution = 0;
      switch (spec.kind) {
        case SynthSpec::Kind::kRational:
          contribution = 0;
          break;
        case SynthSpec::Kind::kIidUniform:
          contribution = rng.next_int(endowment + 1);
          break;
        case SynthSpec::Kind::kStickyDrift: {
          if (t == 1) {
            // Start near the middle of the range, as human cohorts do.
            level = endowment / 2 + rng.next_int(5) - 2;
          } else {
            // Triangular noise on (-3 step_scale, 3 step_scale) plus a
            // proportional pull toward zero.
            double noise = (rng.next_double() + rng.next_double() - 1.0) * 3.0 * spec.step_scale;
            double drift = -spec.decay * level;
            level += static_cast<int>(std::llround(drift + noise));
          }
          level = std::clamp(level, 0, endowment);
          contribution = level;
          break;
        }
      }
      panel.records.push_back(PanelRecord{s, group, t, contribution});
    }
  }
  return panel;
}

}  // namespace wbrl
