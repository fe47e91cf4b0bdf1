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

#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "wbrl/distribution.hpp"
#include "wbrl/rng.hpp"
#include "wbrl/text.hpp"

namespace {
using wbrl::ActionDistribution;
using wbrl::ActionSpace;
}  // namespace

TEST_CASE("action space validation") {
  CHECK_THROWS_AS(ActionSpace(0), std::invalid_argument);
  CHECK_THROWS_AS(ActionSpace(-3), std::invalid_argument);
  CHECK_THROWS_AS(ActionSpace(3, {"a", "b"}), std::invalid_argument);
  ActionSpace labeled(2, {"stay", "move"});
  CHECK(labeled.size == 2);
  CHECK(labeled.labels[1] == "move");
}

TEST_CASE("construction validates and renormalizes mass") {
  ActionSpace space(3);
  CHECK_THROWS_AS(ActionDistribution(space, {0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(ActionDistribution(space, {0.5, 0.6, -0.1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ActionDistribution(space, {0.5, 0.4, 0.2}),
                  std::invalid_argument);  // off by 0.1 > tolerance
  double nan = std::nan("");
  CHECK_THROWS_AS(ActionDistribution(space, {nan, 0.5, 0.5}),
                  std::invalid_argument);

  // Slightly off-sum inputs are accepted and snapped back onto the simplex.
  ActionDistribution snapped(space, {0.5 + 4e-7, 0.25, 0.25});
  double total = 0.0;
  for (double m : snapped.mass()) total += m;
  CHECK(std::fabs(total - 1.0) <= wbrl::kDistributionSumTolerance);
}

TEST_CASE("factories") {
  ActionSpace space(41);
  ActionDistribution u = ActionDistribution::uniform(space);
  CHECK(u.support_size() == 41);
  CHECK(u.mean() == doctest::Approx(20.0).epsilon(1e-12));
  CHECK(u[7] == doctest::Approx(1.0 / 41).epsilon(1e-15));

  ActionDistribution d = ActionDistribution::dirac(space, 13);
  CHECK(d.support_size() == 1);
  CHECK(d[13] == 1.0);
  CHECK(d.mean() == 13.0);
  CHECK_THROWS_AS(ActionDistribution::dirac(space, 41), std::invalid_argument);
  CHECK_THROWS_AS(ActionDistribution::dirac(space, -1), std::invalid_argument);

  std::vector<int> history = {0, 0, 10};
  ActionDistribution h = ActionDistribution::from_history(space, history);
  CHECK(h[0] == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK(h[10] == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(h.mean() == doctest::Approx(10.0 / 3).epsilon(1e-12));
  CHECK(h.support_size() == 2);
  std::vector<int> empty;
  CHECK_THROWS_AS(ActionDistribution::from_history(space, empty),
                  std::invalid_argument);
  std::vector<int> out_of_range = {0, 41};
  CHECK_THROWS_AS(ActionDistribution::from_history(space, out_of_range),
                  std::invalid_argument);
}

TEST_CASE("total variation") {
  ActionSpace space(41);
  ActionDistribution u = ActionDistribution::uniform(space);
  ActionDistribution d0 = ActionDistribution::dirac(space, 0);
  ActionDistribution d1 = ActionDistribution::dirac(space, 1);
  CHECK(d0.total_variation(d1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(u.total_variation(u) == 0.0);
  CHECK(u.total_variation(d0) == doctest::Approx(40.0 / 41).epsilon(1e-12));
  CHECK_THROWS_AS(d0.total_variation(ActionDistribution::uniform(ActionSpace(3))),
                  std::invalid_argument);
}

TEST_CASE("serialization round-trips bit for bit") {
  wbrl::Rng rng(11);
  for (int rep = 0; rep < 50; ++rep) {
    int size = 1 + rng.next_int(60);
    ActionSpace space(size);
    ActionDistribution p(space, oracles::random_distribution(rng, size, 0.4));

    ActionDistribution from_json = ActionDistribution::from_json(p.to_json());
    CHECK(from_json.size() == size);
    CHECK(from_json.mass() == p.mass());

    ActionDistribution from_csv =
        ActionDistribution::from_csv_row(p.to_csv_row());
    CHECK(from_csv.mass() == p.mass());
  }
  CHECK_THROWS_AS(ActionDistribution::from_json("{\"size\":2}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ActionDistribution::from_csv_row(""), std::invalid_argument);
  CHECK_THROWS_AS(ActionDistribution::from_csv_row("0.5,oops"),
                  std::invalid_argument);
}

TEST_CASE("number formatting round-trips and spells infinities") {
  CHECK(wbrl::format_double(0.1) == "0.1");
  CHECK(wbrl::format_double(1.0) == "1");
  CHECK(wbrl::format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(wbrl::parse_double("inf") == std::numeric_limits<double>::infinity());
  CHECK(wbrl::parse_double("-inf") == -std::numeric_limits<double>::infinity());
  CHECK(std::isnan(wbrl::parse_double("nan")));
  CHECK_THROWS_AS(wbrl::parse_double("zero"), std::invalid_argument);
  CHECK_THROWS_AS(wbrl::parse_double(""), std::invalid_argument);
  CHECK_THROWS_AS(wbrl::parse_double("1.5x"), std::invalid_argument);

  wbrl::Rng rng(12);
  for (int rep = 0; rep < 2000; ++rep) {
    double value = (rng.next_double() - 0.5) * std::pow(10.0, rng.next_int(17) - 8);
    CHECK(wbrl::parse_double(wbrl::format_double(value)) == value);
  }
}
