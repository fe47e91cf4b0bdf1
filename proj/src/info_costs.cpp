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

#include "wbrl/info_costs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wbrl/text.hpp"
#include "wbrl/transport.hpp"

namespace wbrl {

double entropy(const ActionDistribution& p) {
  double h = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    double m = p[i];
    if (m > 0.0) h -= m * std::log(m);
  }
  return std::max(h, 0.0);
}

double kl_divergence(const ActionDistribution& p, const ActionDistribution& q) {
  if (!same_space(p.space(), q.space())) {
    throw std::invalid_argument("kl_divergence: mismatched action spaces");
  }
  double d = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    double pi = p[i];
    if (pi == 0.0) continue;
    double qi = q[i];
    if (qi == 0.0) return std::numeric_limits<double>::infinity();
    d += pi * std::log(pi / qi);
  }
  return std::max(d, 0.0);
}

double kl_star(const ActionDistribution& p, const ActionDistribution& q, double epsilon) {
  if (!same_space(p.space(), q.space())) {
    throw std::invalid_argument("kl_star: mismatched action spaces");
  }
  if (!(epsilon > 0.0) || !(epsilon < 1.0 / q.size())) {
    throw std::invalid_argument("kl_star: epsilon must lie in (0, 1/size), got " +
                                format_double(epsilon));
  }
  std::vector<double> smoothed(q.mass());
  double sum = 0.0;
  bool lifted = false;
  for (double& m : smoothed) {
    if (m < epsilon) {
      m = epsilon;
      lifted = true;
    }
    sum += m;
  }
  // Priors already above the floor are untouched; keep the values bit-equal.
  if (!lifted) return kl_divergence(p, q);
  double d = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    double pi = p[i];
    if (pi == 0.0) continue;
    d += pi * std::log(pi * sum / smoothed[static_cast<std::size_t>(i)]);
  }
  return std::max(d, 0.0);
}

double wasserstein_cost(const ActionDistribution& p, const ActionDistribution& q,
                        const OtCostConfig& config) {
  double distance;
  if (config.ground.distance == GroundDistance::kAbsolute && config.ground.order == 1) {
    distance = wasserstein_1d_closed_form(p, q);
  } else {
    CostMatrix cost(p.size(), config.ground);
    distance = wasserstein_exact(p, q, cost).distance;
  }
  if (config.take_root && config.ground.order > 1) {
    distance = std::pow(distance, 1.0 / config.ground.order);
  }
  return distance;
}

InfoCost InfoCost::parse(const std::string& text) {
  std::vector<std::string> parts = split(text, ':');
  if (parts.empty() || parts[0].empty()) {
    throw std::invalid_argument("InfoCost::parse: empty cost string");
  }
  std::string head(trim(parts[0]));
  InfoCost cost;
  if (iequals(head, "entropy")) {
    cost.kind = InfoCostKind::kEntropy;
    if (parts.size() > 1) throw std::invalid_argument("InfoCost::parse: entropy takes no arguments");
    return cost;
  }
  if (iequals(head, "kl")) {
    cost.kind = InfoCostKind::kKl;
    if (parts.size() > 1) throw std::invalid_argument("InfoCost::parse: kl takes no arguments");
    return cost;
  }
  if (iequals(head, "klstar")) {
    cost.kind = InfoCostKind::kKlStar;
    if (parts.size() > 2) throw std::invalid_argument("InfoCost::parse: klstar takes at most one argument");
    if (parts.size() == 2) cost.kl_star_epsilon = parse_double(trim(parts[1]));
    // The exact bound is 1/size, checked at evaluation; (0, 1) is the widest
    // window any action count admits.
    if (!(cost.kl_star_epsilon > 0.0) || !(cost.kl_star_epsilon < 1.0)) {
      throw std::invalid_argument("InfoCost::parse: klstar epsilon must lie in (0, 1)");
    }
    return cost;
  }
  if (iequals(head, "wasserstein")) {
    cost.kind = InfoCostKind::kWasserstein;
    if (parts.size() > 3) throw std::invalid_argument("InfoCost::parse: too many wasserstein arguments");
    if (parts.size() >= 2) cost.ot.ground.distance = parse_ground_distance(std::string(trim(parts[1])));
    if (parts.size() == 3) {
      int order = 0;
      try {
        order = std::stoi(std::string(trim(parts[2])));
      } catch (const std::exception&) {
        throw std::invalid_argument("InfoCost::parse: bad wasserstein order \"" +
                                    std::string(parts[2]) + "\"");
      }
      if (order < 1) throw std::invalid_argument("InfoCost::parse: wasserstein order must be >= 1");
      cost.ot.ground.order = order;
    }
    return cost;
  }
  throw std::invalid_argument("InfoCost::parse: unknown cost kind \"" + head +
                              "\" (expected entropy, kl, klstar, or wasserstein)");
}

std::string InfoCost::str() const {
  switch (kind) {
    case InfoCostKind::kEntropy:
      return "entropy";
    case InfoCostKind::kKl:
      return "kl";
    case InfoCostKind::kKlStar:
      return "klstar:" + format_double(kl_star_epsilon);
    case InfoCostKind::kWasserstein:
      return "wasserstein:" + ground_distance_name(ot.ground.distance) + ":" +
             std::to_string(ot.ground.order);
  }
  throw std::logic_error("InfoCost::str: unknown enum value");
}

double InfoCost::evaluate(const ActionDistribution& p, const ActionDistribution& q) const {
  switch (kind) {
    case InfoCostKind::kEntropy:
      return entropy(p);
    case InfoCostKind::kKl:
      return kl_divergence(p, q);
    case InfoCostKind::kKlStar:
      return kl_star(p, q, kl_star_epsilon);
    case InfoCostKind::kWasserstein:
      return wasserstein_cost(p, q, ot);
  }
  throw std::logic_error("InfoCost::evaluate: unknown enum value");
}

PriorSpec PriorSpec::parse(const std::string& text) {
  std::vector<std::string> parts = split(text, ':');
  if (parts.empty() || parts[0].empty()) {
    throw std::invalid_argument("PriorSpec::parse: empty prior string");
  }
  std::string head(trim(parts[0]));
  PriorSpec spec;
  if (iequals(head, "uniform")) {
    spec.kind = PriorKind::kUniform;
    if (parts.size() > 1) throw std::invalid_argument("PriorSpec::parse: uniform takes no arguments");
    return spec;
  }
  if (iequals(head, "historical")) {
    spec.kind = PriorKind::kHistorical;
    if (parts.size() > 1) throw std::invalid_argument("PriorSpec::parse: historical takes no arguments");
    return spec;
  }
  if (iequals(head, "dirac")) {
    spec.kind = PriorKind::kOptimalDirac;
    if (parts.size() > 2) throw std::invalid_argument("PriorSpec::parse: dirac takes at most one argument");
    if (parts.size() == 2) {
      try {
        spec.dirac_index = std::stoi(std::string(trim(parts[1])));
      } catch (const std::exception&) {
        throw std::invalid_argument("PriorSpec::parse: bad dirac index \"" +
                                    std::string(parts[1]) + "\"");
      }
      if (spec.dirac_index < 0) {
        throw std::invalid_argument("PriorSpec::parse: dirac index must be nonnegative");
      }
    }
    return spec;
  }
  throw std::invalid_argument("PriorSpec::parse: unknown prior kind \"" + head +
                              "\" (expected uniform, historical, or dirac)");
}

std::string PriorSpec::str() const {
  switch (kind) {
    case PriorKind::kUniform:
      return "uniform";
    case PriorKind::kHistorical:
      return "historical";
    case PriorKind::kOptimalDirac:
      return "dirac:" + std::to_string(dirac_index);
    case PriorKind::kCustom:
      return "custom";
  }
  throw std::logic_error("PriorSpec::str: unknown enum value");
}

ActionDistribution make_prior(const PriorSpec& spec, const ActionSpace& space,
                              std::span<const int> history) {
  switch (spec.kind) {
    case PriorKind::kUniform:
      return ActionDistribution::uniform(space);
    case PriorKind::kOptimalDirac:
      return ActionDistribution::dirac(space, spec.dirac_index);
    case PriorKind::kHistorical:
      if (history.empty()) {
        throw std::invalid_argument("make_prior: historical prior needs a non-empty history");
      }
      return ActionDistribution::from_history(space, history);
    case PriorKind::kCustom:
      if (!spec.custom.has_value()) {
        throw std::invalid_argument("make_prior: custom prior needs a mass vector");
      }
      return ActionDistribution(space, *spec.custom);
  }
  throw std::logic_error("make_prior: unknown enum value");
}

}  // namespace wbrl
