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

#ifndef WBRL_DISTRIBUTION_HPP_
#define WBRL_DISTRIBUTION_HPP_

#include <span>
#include <string>
#include <vector>

namespace wbrl {

// Input mass vectors are accepted when |sum - 1| <= kNormalizationTolerance
// and then renormalized; constructed distributions sum to 1 within
// kDistributionSumTolerance.
inline constexpr double kNormalizationTolerance = 1e-6;
inline constexpr double kDistributionSumTolerance = 1e-9;

// Ordinal finite action space with contiguous indices 0..size-1.
struct ActionSpace {
  int size = 0;
  std::vector<std::string> labels;  // optional display names, empty or one per action

  explicit ActionSpace(int size_in = 1, std::vector<std::string> labels_in = {});
};

inline bool same_space(const ActionSpace& a, const ActionSpace& b) {
  return a.size == b.size;
}

// Probability vector over an ActionSpace. Entries are nonnegative, may be
// zero (strict-subset support is fine), and sum to one after construction.
class ActionDistribution {
 public:
  ActionDistribution(ActionSpace space, std::vector<double> mass);

  static ActionDistribution uniform(const ActionSpace& space);
  static ActionDistribution dirac(const ActionSpace& space, int index);
  // Empirical frequency of an observed action sequence.
  static ActionDistribution from_history(const ActionSpace& space, std::span<const int> actions);

  const ActionSpace& space() const { return space_; }
  int size() const { return space_.size; }
  const std::vector<double>& mass() const { return mass_; }
  double operator[](int i) const { return mass_[static_cast<std::size_t>(i)]; }

  // Expected action index.
  double mean() const;
  // Number of actions with strictly positive probability.
  int support_size() const;
  // Half the L1 distance; total variation.
  double total_variation(const ActionDistribution& other) const;

  // {"size": N, "mass": [...]} and a one-line comma-separated row.
  std::string to_json() const;
  static ActionDistribution from_json(const std::string& text);
  std::string to_csv_row() const;
  static ActionDistribution from_csv_row(const std::string& row);

 private:
  ActionSpace space_;
  std::vector<double> mass_;
};

}  // namespace wbrl

#endif  // WBRL_DISTRIBUTION_HPP_
