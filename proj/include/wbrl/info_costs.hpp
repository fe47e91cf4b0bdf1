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

#ifndef WBRL_INFO_COSTS_HPP_
#define WBRL_INFO_COSTS_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wbrl/distribution.hpp"
#include "wbrl/ground_cost.hpp"

namespace wbrl {

// All logarithms are natural.

// Shannon entropy, -sum pi * log(pi); 0 log 0 = 0.
double entropy(const ActionDistribution& p);

// sum p * log(p / q); +infinity when p puts mass where q has none.
double kl_divergence(const ActionDistribution& p, const ActionDistribution& q);

// Lift every prior entry to at least epsilon, renormalize, then KL. Only the
// prior is smoothed: p is the optimized object and may legitimately hold
// zeros. Finite for every valid pair.
double kl_star(const ActionDistribution& p, const ActionDistribution& q, double epsilon);

inline constexpr double kDefaultKlStarEpsilon = 1e-6;

// Ground-cost configuration for the transport-based cost. The reported value
// is the raw plan objective (d^order weighted), not its order-th root, unless
// take_root is set.
struct OtCostConfig {
  GroundCostConfig ground;
  bool take_root = false;
};

// Minimum cost of moving the prior's mass onto the policy. Finite for every
// valid pair, disjoint supports included.
double wasserstein_cost(const ActionDistribution& p, const ActionDistribution& q,
                        const OtCostConfig& config = {});

enum class InfoCostKind { kEntropy, kKl, kKlStar, kWasserstein };

// A selected cost functional with its parameters.
//
// String forms, round-tripped by parse/str:
//   "entropy" | "kl" | "klstar[:epsilon]" | "wasserstein[:distance[:order]]"
// with distance one of abs, fixed, boundary.
struct InfoCost {
  InfoCostKind kind = InfoCostKind::kEntropy;
  double kl_star_epsilon = kDefaultKlStarEpsilon;
  OtCostConfig ot;

  static InfoCost parse(const std::string& text);
  std::string str() const;

  // I(p, q). The prior is ignored for kind entropy.
  double evaluate(const ActionDistribution& p, const ActionDistribution& q) const;
};

enum class PriorKind { kUniform, kHistorical, kOptimalDirac, kCustom };

// Prior-belief constructor selection.
//
// String forms: "uniform" | "historical" | "dirac[:index]".
struct PriorSpec {
  PriorKind kind = PriorKind::kUniform;
  int dirac_index = 0;                        // kOptimalDirac
  std::optional<std::vector<double>> custom;  // kCustom

  static PriorSpec parse(const std::string& text);
  std::string str() const;
};

// history is required (non-empty) for kHistorical and ignored otherwise.
ActionDistribution make_prior(const PriorSpec& spec, const ActionSpace& space,
                              std::span<const int> history = {});

}  // namespace wbrl

#endif  // WBRL_INFO_COSTS_HPP_
