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

#include "wbrl/batch.hpp"

#include <stdexcept>

#include "wbrl/transport.hpp"

namespace wbrl {

std::string exec_mode_name(ExecMode mode) {
  switch (mode) {
    case ExecMode::kSerial: return "serial";
    case ExecMode::kParallel: return "parallel";
  }
  throw std::logic_error("exec_mode_name: unknown enum value");
}

ExecMode parse_exec_mode(const std::string& name) {
  if (name == "serial") return ExecMode::kSerial;
  if (name == "parallel") return ExecMode::kParallel;
  throw std::invalid_argument("parse_exec_mode: expected serial or parallel, got \"" + name + "\"");
}

namespace {

void check_batch(std::span<const ActionDistribution> targets,
                 std::span<const ActionDistribution> sources) {
  if (targets.size() != sources.size()) {
    throw std::invalid_argument("batch solve: one source per target required");
  }
}

}  // namespace

std::vector<double> wasserstein_exact_batch(std::span<const ActionDistribution> targets,
                                            std::span<const ActionDistribution> sources,
                                            const CostMatrix& cost, ExecMode mode) {
  check_batch(targets, sources);
  const int count = static_cast<int>(targets.size());
  std::vector<double> out(targets.size(), 0.0);
  if (mode == ExecMode::kParallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int k = 0; k < count; ++k) {
      out[static_cast<std::size_t>(k)] =
          wasserstein_exact(targets[static_cast<std::size_t>(k)],
                            sources[static_cast<std::size_t>(k)], cost)
              .distance;
    }
  } else {
    for (int k = 0; k < count; ++k) {
      out[static_cast<std::size_t>(k)] =
          wasserstein_exact(targets[static_cast<std::size_t>(k)],
                            sources[static_cast<std::size_t>(k)], cost)
              .distance;
    }
  }
  return out;
}

std::vector<double> wasserstein_1d_batch(std::span<const ActionDistribution> targets,
                                         std::span<const ActionDistribution> sources,
                                         ExecMode mode) {
  check_batch(targets, sources);
  const int count = static_cast<int>(targets.size());
  std::vector<double> out(targets.size(), 0.0);
  if (mode == ExecMode::kParallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int k = 0; k < count; ++k) {
      out[static_cast<std::size_t>(k)] = wasserstein_1d_closed_form(
          targets[static_cast<std::size_t>(k)], sources[static_cast<std::size_t>(k)]);
    }
  } else {
    for (int k = 0; k < count; ++k) {
      out[static_cast<std::size_t>(k)] = wasserstein_1d_closed_form(
          targets[static_cast<std::size_t>(k)], sources[static_cast<std::size_t>(k)]);
    }
  }
  return out;
}

}  // namespace wbrl
