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

#ifndef WBRL_GROUND_COST_HPP_
#define WBRL_GROUND_COST_HPP_

#include <string>
#include <vector>

namespace wbrl {

// Ground distance between action indices.
//   kAbsolute: d(i, j) = |i - j|
//   kFixed:    d(i, j) = fixed_value if i != j, else 0
//   kBoundary: |i - j| plus `boundary_penalty` when i and j fall on opposite
//              sides of `boundary` (i < boundary xor j < boundary)
enum class GroundDistance { kAbsolute, kFixed, kBoundary };

std::string ground_distance_name(GroundDistance d);
GroundDistance parse_ground_distance(const std::string& name);

struct GroundCostConfig {
  GroundDistance distance = GroundDistance::kAbsolute;
  int order = 1;                   // cost entries are d(i, j)^order; must be >= 1
  double fixed_value = 1.0;        // off-diagonal distance, kFixed only
  int boundary = 0;                // first index of the upper region, kBoundary only
  double boundary_penalty = 1.0;   // added before raising to `order`
};

// Dense row-major cost matrix C[i*size + j] = d(i, j)^order over a square
// action space.
class CostMatrix {
 public:
  CostMatrix(int size, GroundCostConfig config);

  int size() const { return size_; }
  const GroundCostConfig& config() const { return config_; }
  double at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * size_ + j]; }
  const std::vector<double>& entries() const { return entries_; }
  double max_entry() const;

  // One comma-separated line per row; values round-trip exactly.
  std::string to_csv() const;

 private:
  int size_;
  GroundCostConfig config_;
  std::vector<double> entries_;
};

}  // namespace wbrl

#endif  // WBRL_GROUND_COST_HPP_
