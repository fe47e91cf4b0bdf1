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

// Times the batch transport kernels in serial and parallel mode on the same
// inputs and checks that both modes return identical results.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "wbrl/batch.hpp"
#include "wbrl/distribution.hpp"
#include "wbrl/ground_cost.hpp"
#include "wbrl/rng.hpp"
#include "wbrl/transport.hpp"

namespace {

using wbrl::ActionDistribution;
using wbrl::ActionSpace;

ActionDistribution random_distribution(const ActionSpace& space, wbrl::Rng& rng) {
  std::vector<double> mass(space.size, 0.0);
  double total = 0.0;
  for (double& m : mass) {
    // Sparse support exercises degenerate transport bases.
    if (rng.next_double() < 0.4) {
      m = rng.next_double() + 1e-3;
      total += m;
    }
  }
  if (total == 0.0) {
    mass[rng.next_int(space.size)] = 1.0;
    total = 1.0;
  }
  for (double& m : mass) m /= total;
  return ActionDistribution(space, mass);
}

double run_ms(const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  body();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main() {
  const ActionSpace space(41);
  wbrl::Rng rng(20260822);

  const int exact_pairs = 512;
  const int closed_pairs = 20000;

  std::vector<ActionDistribution> targets;
  std::vector<ActionDistribution> sources;
  for (int i = 0; i < closed_pairs; ++i) {
    targets.push_back(random_distribution(space, rng));
    sources.push_back(random_distribution(space, rng));
  }
  std::vector<ActionDistribution> exact_targets(targets.begin(),
                                                targets.begin() + exact_pairs);
  std::vector<ActionDistribution> exact_sources(sources.begin(),
                                                sources.begin() + exact_pairs);

  wbrl::GroundCostConfig ground;
  ground.order = 2.0;
  wbrl::CostMatrix cost(space.size, ground);

  std::vector<double> exact_serial;
  std::vector<double> exact_parallel;
  double exact_serial_ms = run_ms([&] {
    exact_serial = wbrl::wasserstein_exact_batch(exact_targets, exact_sources,
                                                 cost, wbrl::ExecMode::kSerial);
  });
  double exact_parallel_ms = run_ms([&] {
    exact_parallel = wbrl::wasserstein_exact_batch(
        exact_targets, exact_sources, cost, wbrl::ExecMode::kParallel);
  });

  std::vector<double> closed_serial;
  std::vector<double> closed_parallel;
  double closed_serial_ms = run_ms([&] {
    closed_serial =
        wbrl::wasserstein_1d_batch(targets, sources, wbrl::ExecMode::kSerial);
  });
  double closed_parallel_ms = run_ms([&] {
    closed_parallel =
        wbrl::wasserstein_1d_batch(targets, sources, wbrl::ExecMode::kParallel);
  });

  bool exact_match = exact_serial == exact_parallel;
  bool closed_match = closed_serial == closed_parallel;

  std::printf("kernel                pairs    serial ms   parallel ms   speedup   identical\n");
  std::printf("exact transport lp    %5d    %9.2f   %11.2f   %7.2f   %s\n",
              exact_pairs, exact_serial_ms, exact_parallel_ms,
              exact_parallel_ms > 0 ? exact_serial_ms / exact_parallel_ms : 0.0,
              exact_match ? "yes" : "NO");
  std::printf("order-1 closed form   %5d    %9.2f   %11.2f   %7.2f   %s\n",
              closed_pairs, closed_serial_ms, closed_parallel_ms,
              closed_parallel_ms > 0 ? closed_serial_ms / closed_parallel_ms
                                     : 0.0,
              closed_match ? "yes" : "NO");
  return exact_match && closed_match ? 0 : 1;
}
