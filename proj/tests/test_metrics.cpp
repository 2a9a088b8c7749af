// Copyright 2026 The Authors.
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "metrics.hpp"
#include "support/samplers.hpp"
#include "text_format.hpp"

using namespace mobicache;

namespace {

Instance motivating() {
  return load_instance(std::string(MC_FIXTURE_DIR "/motivating.instance"));
}

Placement make_placement(const Instance& inst, std::vector<std::vector<int>> cached) {
  return validate_placement(inst, Placement{std::move(cached)});
}

}  // namespace

TEST_CASE("mobility-unaware placement on the two-cell example costs 16 + 31 = 47") {
  const Instance inst = motivating();
  const Placement p = make_placement(inst, {{0}, {1}});
  const EvaluationReport r = evaluate(inst, p);
  CHECK(r.per_slot_cost == std::vector<double>{16, 31});
  CHECK(r.total_cost == 47);
  CHECK(r.cost_constant == 66);
  CHECK(r.utility == 19);
  CHECK(r.per_slot_utility == std::vector<double>{17, 2});
}

TEST_CASE("caching the shared favorite everywhere costs 19 + 19 = 38") {
  const Instance inst = motivating();
  const EvaluationReport r = evaluate(inst, make_placement(inst, {{2}, {2}}));
  CHECK(r.total_cost == 38);
  CHECK(r.utility == 28);
  CHECK(r.per_slot_utility == std::vector<double>{14, 14});
}

TEST_CASE("empty placement saves nothing") {
  const Instance inst = motivating();
  const EvaluationReport r = evaluate(inst, empty_placement(inst));
  CHECK(r.utility == 0);
  CHECK(r.total_cost == r.cost_constant);
  CHECK(r.hits == 0);
  CHECK(r.misses == 2 * 2 * 3);
}

TEST_CASE("reachable cached set is the union over reachable stations") {
  const Instance inst = motivating();
  const Placement split = make_placement(inst, {{0}, {1}});

  // user 0 sits in station 0's cell in the first slot
  CHECK(reachable_cached_set(inst, split, 0, 0) == std::vector<int>{0});
  CHECK(reachable_cached_set(inst, split, 1, 0) == std::vector<int>{1});

  const Placement shared = make_placement(inst, {{2}, {2}});
  CHECK(reachable_cached_set(inst, shared, 0, 0) == std::vector<int>{2});
  CHECK(reachable_cached_set(inst, shared, 1, 1) == std::vector<int>{2});

  CHECK_THROWS_AS(reachable_cached_set(inst, split, 5, 0), Error);
  CHECK_THROWS_AS(reachable_cached_set(inst, split, 0, 9), Error);
}

TEST_CASE("a user out of coverage has an empty reachable cached set") {
  const Instance inst = parse_instance(
      "stations 1\ncapacities 1\nusers 1\ncontents 2\nslots 2\nslot_seconds 20\n"
      "cost 0 0 5\ncost 0 1 3\nreach 0 0 0\n");
  const Placement p = validate_placement(inst, Placement{{{0}}});
  CHECK(reachable_cached_set(inst, p, 1, 0).empty());
  const EvaluationReport r = evaluate(inst, p);
  // slot 1: saved 5; slot 2: out of coverage, full cost
  CHECK(r.per_slot_utility == std::vector<double>{5, 0});
  CHECK(r.per_slot_cost == std::vector<double>{3, 8});
}

TEST_CASE("max degree") {
  CHECK(max_degree(motivating()) == 1);

  const Instance overlap = parse_instance(
      "stations 3\ncapacities 1 1 1\nusers 1\ncontents 1\nslots 2\nslot_seconds 20\n"
      "reach 0 0 0,1,2\n");
  CHECK(max_degree(overlap) == 3);

  const Instance uncovered = parse_instance(
      "stations 1\ncapacities 1\nusers 1\ncontents 1\nslots 1\nslot_seconds 20\n");
  CHECK(max_degree(uncovered) == 1);  // degenerate floor
}

TEST_CASE("identity: utility + total_cost equals the cost constant") {
  mctest::TestRng rng(11);
  for (int n = 0; n < 300; ++n) {
    const Instance inst = mctest::random_instance(rng);
    const Placement p = mctest::random_placement(rng, inst);
    const EvaluationReport r = evaluate(inst, p);
    CHECK(r.utility + r.total_cost == r.cost_constant);  // exact: integer costs
    CHECK(r.utility == mctest::naive_utility(inst, p));
    CHECK(r.total_cost == mctest::naive_total_cost(inst, p));

    double slot_utility_sum = 0;
    double slot_cost_sum = 0;
    for (std::size_t t = 0; t < inst.num_slots(); ++t) {
      slot_utility_sum += r.per_slot_utility[t];
      slot_cost_sum += r.per_slot_cost[t];
    }
    CHECK(r.utility == slot_utility_sum);
    CHECK(r.total_cost == slot_cost_sum);
  }
}

TEST_CASE("identity holds within 1e-9 relative for fractional costs") {
  mctest::TestRng rng(12);
  for (int n = 0; n < 100; ++n) {
    Instance inst = mctest::random_instance(rng);
    for (double& v : inst.costs.values) v *= 0.1;  // no longer exactly representable
    const Placement p = mctest::random_placement(rng, inst);
    const EvaluationReport r = evaluate(inst, p);
    const double gap = std::abs(r.utility + r.total_cost - r.cost_constant);
    CHECK(gap <= 1e-9 * std::max(1.0, r.cost_constant));
  }
}

TEST_CASE("adding a cached content never decreases utility") {
  mctest::TestRng rng(13);
  for (int n = 0; n < 200; ++n) {
    Instance inst = mctest::random_instance(rng);
    const Placement p = mctest::random_placement(rng, inst);
    for (auto& c : inst.capacities) ++c;  // room for one more everywhere
    const double before = utility(inst, p);

    Placement grown = p;
    const auto station = static_cast<std::size_t>(rng.below(inst.num_stations()));
    const int content = static_cast<int>(rng.below(inst.library_size));
    grown.cached[station].push_back(content);
    grown = validate_placement(inst, std::move(grown));
    CHECK(utility(inst, grown) >= before);
  }
}

TEST_CASE("scaling every cost by lambda scales the report by lambda") {
  mctest::TestRng rng(14);
  for (double lambda : {2.0, 0.5, 10.0}) {
    const Instance inst = mctest::random_instance(rng);
    Instance scaled = inst;
    for (double& v : scaled.costs.values) v *= lambda;
    const Placement p = mctest::random_placement(rng, inst);
    const EvaluationReport base = evaluate(inst, p);
    const EvaluationReport big = evaluate(scaled, p);
    CHECK(big.utility == doctest::Approx(lambda * base.utility).epsilon(1e-12));
    CHECK(big.total_cost == doctest::Approx(lambda * base.total_cost).epsilon(1e-12));
    CHECK(big.cost_constant == doctest::Approx(lambda * base.cost_constant).epsilon(1e-12));
  }
}

TEST_CASE("duplicating a content at a second reachable station does not double count") {
  // one user reaching both stations every slot
  const Instance inst = parse_instance(
      "stations 2\ncapacities 2 2\nusers 1\ncontents 2\nslots 2\nslot_seconds 20\n"
      "cost 0 0 5\ncost 0 1 2\n"
      "reach 0 0 0,1\nreach 1 0 0,1\n");
  const Placement one = validate_placement(inst, Placement{{{0}, {}}});
  const Placement dup = validate_placement(inst, Placement{{{0}, {0}}});
  CHECK(utility(inst, one) == 10);
  CHECK(utility(inst, dup) == 10);
}
