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

#include "wbrl/ground_cost.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wbrl/text.hpp"

namespace wbrl {

std::string ground_distance_name(GroundDistance d) {
  switch (d) {
    case GroundDistance::kAbsolute: return "abs";
    case GroundDistance::kFixed: return "fixed";
    case GroundDistance::kBoundary: return "boundary";
  }
  throw std::logic_error("ground_distance_name: unknown enum value");
}

GroundDistance parse_ground_distance(const std::string& name) {
  if (name == "abs") return GroundDistance::kAbsolute;
  if (name == "fixed") return GroundDistance::kFixed;
  if (name == "boundary") return GroundDistance::kBoundary;
  throw std::invalid_argument("parse_ground_distance: unknown distance \"" + name +
                              "\" (expected abs, fixed, or boundary)");
}

namespace {

double base_distance(const GroundCostConfig& config, int i, int j) {
  switch (config.distance) {
    case GroundDistance::kAbsolute:
      return std::abs(i - j);
    case GroundDistance::kFixed:
      return (i != j) ? config.fixed_value : 0.0;
    case GroundDistance::kBoundary: {
      double d = std::abs(i - j);
      if ((i < config.boundary) != (j < config.boundary)) d += config.boundary_penalty;
      return d;
    }
  }
  throw std::logic_error("base_distance: unknown enum value");
}

}  // namespace

CostMatrix::CostMatrix(int size, GroundCostConfig config)
    : size_(size), config_(config) {
  if (size_ <= 0) {
    throw std::invalid_argument("CostMatrix: size must be positive");
  }
  if (config_.order < 1) {
    throw std::invalid_argument("CostMatrix: order must be >= 1, got " +
                                std::to_string(config_.order));
  }
  if (config_.distance == GroundDistance::kFixed && config_.fixed_value < 0.0) {
    throw std::invalid_argument("CostMatrix: fixed_value must be nonnegative");
  }
  if (config_.distance == GroundDistance::kBoundary) {
    if (config_.boundary < 0 || config_.boundary > size_ - 1) {
      throw std::invalid_argument("CostMatrix: boundary " + std::to_string(config_.boundary) +
                                  " out of range [0, " + std::to_string(size_ - 1) + "]");
    }
    if (config_.boundary_penalty < 0.0) {
      throw std::invalid_argument("CostMatrix: boundary_penalty must be nonnegative");
    }
  }
  entries_.resize(static_cast<std::size_t>(size_) * size_);
  for (int i = 0; i < size_; ++i) {
    for (int j = 0; j < size_; ++j) {
      double d = base_distance(config_, i, j);
      double c = d;
      for (int k = 1; k < config_.order; ++k) c *= d;
      entries_[static_cast<std::size_t>(i) * size_ + j] = c;
    }
  }
}

double CostMatrix::max_entry() const {
  double m = 0.0;
  for (double c : entries_) m = std::max(m, c);
  return m;
}

std::string CostMatrix::to_csv() const {
  std::string out;
  for (int i = 0; i < size_; ++i) {
    for (int j = 0; j < size_; ++j) {
      if (j > 0) out += ',';
      out += format_double(at(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace wbrl
