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

#ifndef WBRL_BATCH_HPP_
#define WBRL_BATCH_HPP_

#include <span>
#include <string>
#include <vector>

#include "wbrl/distribution.hpp"
#include "wbrl/ground_cost.hpp"

namespace wbrl {

// kSerial is the reference path; kParallel distributes independent solves
// across OpenMP threads and must return identical values (solves are pure, so
// equality is exact, not approximate). Without OpenMP, kParallel degrades to
// the serial path.
enum class ExecMode { kSerial, kParallel };

std::string exec_mode_name(ExecMode mode);
ExecMode parse_exec_mode(const std::string& name);

// out[k] = exact transport distance between targets[k] and sources[k].
std::vector<double> wasserstein_exact_batch(std::span<const ActionDistribution> targets,
                                            std::span<const ActionDistribution> sources,
                                            const CostMatrix& cost, ExecMode mode);

// out[k] = closed-form W1 (absolute ground distance, order 1).
std::vector<double> wasserstein_1d_batch(std::span<const ActionDistribution> targets,
                                         std::span<const ActionDistribution> sources,
                                         ExecMode mode);

}  // namespace wbrl

#endif  // WBRL_BATCH_HPP_
