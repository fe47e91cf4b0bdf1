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
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "wbrl/info_costs.hpp"
#include "wbrl/rng.hpp"
#include "wbrl/transport.hpp"

namespace {
using wbrl::ActionDistribution;
using wbrl::ActionSpace;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

TEST_CASE("entropy basics") {
  ActionSpace space(41);
  CHECK(wbrl::entropy(ActionDistribution::uniform(space)) ==
        doctest::Approx(std::log(41.0)).epsilon(1e-12));
  CHECK(wbrl::entropy(ActionDistribution::dirac(space, 5)) == 0.0);
  // Two-point distribution: -p log p - (1-p) log (1-p).
  ActionSpace two(2);
  ActionDistribution coin(two, {0.25, 0.75});
  CHECK(wbrl::entropy(coin) ==
        doctest::Approx(-0.25 * std::log(0.25) - 0.75 * std::log(0.75))
            .epsilon(1e-14));
  // Entropy never exceeds log of the support size.
  wbrl::Rng rng(21);
  for (int rep = 0; rep < 200; ++rep) {
    int size = 2 + rng.next_int(50);
    ActionDistribution p(ActionSpace(size),
                         oracles::random_distribution(rng, size, 0.3));
    double h = wbrl::entropy(p);
    CHECK(h >= 0.0);
    CHECK(h <= std::log(static_cast<double>(size)) + 1e-12);
  }
}

TEST_CASE("relative entropy basics") {
  ActionSpace space(5);
  ActionDistribution u = ActionDistribution::uniform(space);
  ActionDistribution p(space, {0.4, 0.3, 0.2, 0.1, 0.0});

  CHECK(wbrl::kl_divergence(p, p) == 0.0);
  CHECK(wbrl::kl_divergence(u, u) == 0.0);
  // Zero in p is fine; zero in q under p's support is not.
  CHECK(std::isfinite(wbrl::kl_divergence(p, u)));
  CHECK(wbrl::kl_divergence(u, p) == kInf);
  CHECK(wbrl::kl_divergence(ActionDistribution::dirac(space, 4), p) == kInf);

  // Divergence from the uniform prior collapses to log n minus entropy.
  wbrl::Rng rng(22);
  for (int rep = 0; rep < 200; ++rep) {
    int size = 2 + rng.next_int(60);
    ActionSpace s(size);
    ActionDistribution r(s, oracles::random_distribution(rng, size, 0.3));
    double direct = wbrl::kl_divergence(r, ActionDistribution::uniform(s));
    double via_entropy = std::log(static_cast<double>(size)) - wbrl::entropy(r);
    CHECK(std::fabs(direct - via_entropy) <= 1e-9);
    CHECK(direct >= -1e-12);  // nonnegativity
  }
}

TEST_CASE("smoothed relative entropy") {
  ActionSpace space(4);
  ActionDistribution p(space, {1.0, 0.0, 0.0, 0.0});
  ActionDistribution q(space, {0.0, 1.0, 0.0, 0.0});

  // Finite where the raw divergence blows up.
  CHECK(wbrl::kl_divergence(p, q) == kInf);
  CHECK(std::isfinite(wbrl::kl_star(p, q, 1e-6)));

  // Hand value: epsilon 0.25 lifts q to (.25, 1, .25, .25)/1.75.
  ActionSpace two(2);
  ActionDistribution p2(two, {1.0, 0.0});
  ActionDistribution q2(two, {0.0, 1.0});
  CHECK(wbrl::kl_star(p2, q2, 0.25) ==
        doctest::Approx(std::log(1.25 / 0.25)).epsilon(1e-14));

  // Strictly positive priors above the floor are untouched: kl* == kl.
  wbrl::Rng rng(23);
  for (int rep = 0; rep < 100; ++rep) {
    int size = 2 + rng.next_int(30);
    ActionSpace s(size);
    ActionDistribution a(s, oracles::random_distribution(rng, size, 0.5));
    std::vector<double> dense = oracles::random_distribution(rng, size, 0.0);
    for (double& m : dense) m = (m + 1.0 / size) / 2.0;  // floor 1/(2n) > eps
    ActionDistribution b(s, dense);
    CHECK(wbrl::kl_star(a, b, 1e-6) == wbrl::kl_divergence(a, b));
  }

  // Epsilon must sit strictly inside (0, 1/size).
  CHECK_THROWS_AS(wbrl::kl_star(p, q, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(wbrl::kl_star(p, q, 0.25), std::invalid_argument);
  CHECK_THROWS_AS(wbrl::kl_star(p, q, -1e-3), std::invalid_argument);
}

TEST_CASE("transport cost evaluation modes") {
  ActionSpace space(9);
  wbrl::Rng rng(24);
  for (int rep = 0; rep < 40; ++rep) {
    ActionDistribution p(space, oracles::random_distribution(rng, 9, 0.4));
    ActionDistribution q(space, oracles::random_distribution(rng, 9, 0.4));

    wbrl::OtCostConfig linear;
    wbrl::CostMatrix cost(9, linear.ground);
    CHECK(std::fabs(wbrl::wasserstein_cost(p, q, linear) -
                    wbrl::wasserstein_exact(p, q, cost).distance) <= 1e-12);

    wbrl::OtCostConfig quad;
    quad.ground.order = 2;
    wbrl::OtCostConfig quad_root = quad;
    quad_root.take_root = true;
    double raw = wbrl::wasserstein_cost(p, q, quad);
    CHECK(std::fabs(wbrl::wasserstein_cost(p, q, quad_root) - std::sqrt(raw)) <=
          1e-12);
    CHECK(raw >= -1e-12);
  }
  // Disjoint supports stay finite, unlike the divergences.
  ActionDistribution lo = ActionDistribution::dirac(space, 0);
  ActionDistribution hi = ActionDistribution::dirac(space, 8);
  CHECK(wbrl::wasserstein_cost(lo, hi) == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("cost spec strings parse and round-trip") {
  using wbrl::InfoCost;
  using wbrl::InfoCostKind;

  InfoCost entropy = InfoCost::parse("entropy");
  CHECK(entropy.kind == InfoCostKind::kEntropy);
  CHECK(entropy.str() == "entropy");

  InfoCost kl = InfoCost::parse("kl");
  CHECK(kl.kind == InfoCostKind::kKl);
  CHECK(kl.str() == "kl");

  InfoCost klstar = InfoCost::parse("klstar");
  CHECK(klstar.kind == InfoCostKind::kKlStar);
  CHECK(klstar.kl_star_epsilon == wbrl::kDefaultKlStarEpsilon);
  InfoCost klstar_eps = InfoCost::parse("klstar:0.001");
  CHECK(klstar_eps.kl_star_epsilon == 0.001);
  CHECK(InfoCost::parse(klstar_eps.str()).kl_star_epsilon == 0.001);

  InfoCost w = InfoCost::parse("wasserstein");
  CHECK(w.kind == InfoCostKind::kWasserstein);
  CHECK(w.ot.ground.distance == wbrl::GroundDistance::kAbsolute);
  CHECK(w.ot.ground.order == 1);
  CHECK(w.str() == "wasserstein:abs:1");

  InfoCost w2 = InfoCost::parse("wasserstein:abs:2");
  CHECK(w2.ot.ground.order == 2);
  InfoCost wf = InfoCost::parse("wasserstein:fixed:1");
  CHECK(wf.ot.ground.distance == wbrl::GroundDistance::kFixed);
  CHECK(InfoCost::parse(w2.str()).ot.ground.order == 2);

  CHECK_THROWS_AS(InfoCost::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(InfoCost::parse("negentropy"), std::invalid_argument);
  CHECK_THROWS_AS(InfoCost::parse("klstar:0"), std::invalid_argument);
  CHECK_THROWS_AS(InfoCost::parse("klstar:1"), std::invalid_argument);
  CHECK_THROWS_AS(InfoCost::parse("wasserstein:euclid:1"),
                  std::invalid_argument);
  CHECK_THROWS_AS(InfoCost::parse("wasserstein:abs:0"), std::invalid_argument);
}

TEST_CASE("evaluate dispatches by kind") {
  ActionSpace space(6);
  wbrl::Rng rng(25);
  ActionDistribution p(space, oracles::random_distribution(rng, 6, 0.0));
  ActionDistribution q(space, oracles::random_distribution(rng, 6, 0.0));

  CHECK(wbrl::InfoCost::parse("entropy").evaluate(p, q) == wbrl::entropy(p));
  CHECK(wbrl::InfoCost::parse("kl").evaluate(p, q) ==
        wbrl::kl_divergence(p, q));
  CHECK(wbrl::InfoCost::parse("klstar:0.01").evaluate(p, q) ==
        wbrl::kl_star(p, q, 0.01));
  CHECK(wbrl::InfoCost::parse("wasserstein:abs:2").evaluate(p, q) ==
        doctest::Approx(wbrl::wasserstein_cost(
                            p, q,
                            []() {
                              wbrl::OtCostConfig c;
                              c.ground.order = 2;
                              return c;
                            }()))
            .epsilon(1e-15));
}

TEST_CASE("prior specs") {
  using wbrl::PriorKind;
  using wbrl::PriorSpec;

  CHECK(PriorSpec::parse("uniform").kind == PriorKind::kUniform);
  CHECK(PriorSpec::parse("historical").kind == PriorKind::kHistorical);
  PriorSpec d = PriorSpec::parse("dirac:7");
  CHECK(d.kind == PriorKind::kOptimalDirac);
  CHECK(d.dirac_index == 7);
  CHECK(PriorSpec::parse("dirac").dirac_index == 0);
  CHECK(PriorSpec::parse(d.str()).dirac_index == 7);
  CHECK(PriorSpec::parse("uniform").str() == "uniform");
  CHECK_THROWS_AS(PriorSpec::parse("gaussian"), std::invalid_argument);
  CHECK_THROWS_AS(PriorSpec::parse("dirac:-2"), std::invalid_argument);

  ActionSpace space(11);
  ActionDistribution u = wbrl::make_prior(PriorSpec::parse("uniform"), space);
  CHECK(u.support_size() == 11);
  ActionDistribution dd = wbrl::make_prior(PriorSpec::parse("dirac:10"), space);
  CHECK(dd[10] == 1.0);
  CHECK_THROWS_AS(wbrl::make_prior(PriorSpec::parse("dirac:11"), space),
                  std::invalid_argument);

  std::vector<int> history = {3, 3, 9};
  ActionDistribution h =
      wbrl::make_prior(PriorSpec::parse("historical"), space, history);
  CHECK(h[3] == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK_THROWS_AS(wbrl::make_prior(PriorSpec::parse("historical"), space),
                  std::invalid_argument);
}
