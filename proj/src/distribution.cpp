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

#include "wbrl/distribution.hpp"

#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "wbrl/text.hpp"

namespace wbrl {

ActionSpace::ActionSpace(int size_in, std::vector<std::string> labels_in)
    : size(size_in), labels(std::move(labels_in)) {
  if (size <= 0) {
    throw std::invalid_argument("ActionSpace: size must be positive, got " +
                                std::to_string(size));
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != size) {
    throw std::invalid_argument("ActionSpace: expected " + std::to_string(size) +
                                " labels, got " + std::to_string(labels.size()));
  }
}

ActionDistribution::ActionDistribution(ActionSpace space, std::vector<double> mass)
    : space_(std::move(space)), mass_(std::move(mass)) {
  if (static_cast<int>(mass_.size()) != space_.size) {
    throw std::invalid_argument("ActionDistribution: mass vector has " +
                                std::to_string(mass_.size()) + " entries, space has " +
                                std::to_string(space_.size));
  }
  double sum = 0.0;
  for (double m : mass_) {
    if (!std::isfinite(m) || m < 0.0) {
      throw std::invalid_argument("ActionDistribution: mass entries must be finite and nonnegative");
    }
    sum += m;
  }
  if (std::abs(sum - 1.0) > kNormalizationTolerance) {
    throw std::invalid_argument("ActionDistribution: mass sums to " + format_double(sum) +
                                ", outside tolerance " + format_double(kNormalizationTolerance));
  }
  // Already-normalized input is kept bit-identical so that construction is
  // idempotent and serialization round-trips exactly.
  if (std::abs(sum - 1.0) > 1e-12) {
    for (double& m : mass_) m /= sum;
  }
}

ActionDistribution ActionDistribution::uniform(const ActionSpace& space) {
  std::vector<double> mass(static_cast<std::size_t>(space.size), 1.0 / space.size);
  return ActionDistribution(space, std::move(mass));
}

ActionDistribution ActionDistribution::dirac(const ActionSpace& space, int index) {
  if (index < 0 || index >= space.size) {
    throw std::invalid_argument("ActionDistribution::dirac: index " + std::to_string(index) +
                                " out of range for size " + std::to_string(space.size));
  }
  std::vector<double> mass(static_cast<std::size_t>(space.size), 0.0);
  mass[static_cast<std::size_t>(index)] = 1.0;
  return ActionDistribution(space, std::move(mass));
}

ActionDistribution ActionDistribution::from_history(const ActionSpace& space,
                                                    std::span<const int> actions) {
  if (actions.empty()) {
    throw std::invalid_argument("ActionDistribution::from_history: empty action sequence");
  }
  std::vector<double> counts(static_cast<std::size_t>(space.size), 0.0);
  for (int a : actions) {
    if (a < 0 || a >= space.size) {
      throw std::invalid_argument("ActionDistribution::from_history: action " +
                                  std::to_string(a) + " out of range for size " +
                                  std::to_string(space.size));
    }
    counts[static_cast<std::size_t>(a)] += 1.0;
  }
  for (double& c : counts) c /= static_cast<double>(actions.size());
  return ActionDistribution(space, std::move(counts));
}

double ActionDistribution::mean() const {
  double m = 0.0;
  for (std::size_t i = 0; i < mass_.size(); ++i) m += static_cast<double>(i) * mass_[i];
  return m;
}

int ActionDistribution::support_size() const {
  int n = 0;
  for (double m : mass_) n += (m > 0.0) ? 1 : 0;
  return n;
}

double ActionDistribution::total_variation(const ActionDistribution& other) const {
  if (!same_space(space_, other.space_)) {
    throw std::invalid_argument("total_variation: mismatched action spaces");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < mass_.size(); ++i) s += std::abs(mass_[i] - other.mass_[i]);
  return 0.5 * s;
}

std::string ActionDistribution::to_json() const {
  nlohmann::ordered_json j;
  j["size"] = space_.size;
  j["mass"] = mass_;
  return j.dump();
}

ActionDistribution ActionDistribution::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("ActionDistribution::from_json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("size") || !j.contains("mass")) {
    throw std::invalid_argument("ActionDistribution::from_json: expected {\"size\": N, \"mass\": [...]}");
  }
  int size = j.at("size").get<int>();
  std::vector<double> mass = j.at("mass").get<std::vector<double>>();
  return ActionDistribution(ActionSpace(size), std::move(mass));
}

std::string ActionDistribution::to_csv_row() const {
  std::string row;
  for (std::size_t i = 0; i < mass_.size(); ++i) {
    if (i > 0) row += ',';
    row += format_double(mass_[i]);
  }
  return row;
}

ActionDistribution ActionDistribution::from_csv_row(const std::string& row) {
  std::vector<double> mass;
  for (std::string_view field : split(row, ',')) {
    mass.push_back(parse_double(trim(field)));
  }
  // Size is read before the move: argument evaluation order is unspecified.
  const int size = static_cast<int>(mass.size());
  return ActionDistribution(ActionSpace(size), std::move(mass));
}

}  // namespace wbrl
