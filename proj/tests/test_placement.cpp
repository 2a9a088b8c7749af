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

#include <algorithm>
#include <string>
#include <vector>

#include "metrics.hpp"
#include "placement.hpp"
#include "support/samplers.hpp"
#include "text_format.hpp"

using namespace mobicache;

namespace {

Instance motivating() {
  return load_instance(std::string(MC_FIXTURE_DIR "/motivating.instance"));
}

}  // namespace

TEST_CASE("sojourn times count reachable slots per user and station") {
  const Instance inst = motivating();
  const SojournTable t = sojourn_times(inst);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(0, 1) == 1);
  CHECK(t.at(1, 0) == 1);
  CHECK(t.at(1, 1) == 1);

  const Instance doubled = mctest::concat_trace_with_self(inst);
  const SojournTable t2 = sojourn_times(doubled);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t f = 0; f < 2; ++f) CHECK(t2.at(i, f) == 2 * t.at(i, f));
  }

  const Instance sparse = parse_instance(
      "stations 2\ncapacities 1 1\nusers 1\ncontents 1\nslots 3\nslot_seconds 20\n"
      "reach 0 0 0\nreach 2 0 0\n");
  CHECK(sojourn_times(sparse).at(0, 1) == 0);  // never reaches station 1
}

TEST_CASE("sojourn weights on the two-cell example are (9, 10, 14) at both stations") {
  const Instance inst = motivating();
  const WeightTable w = sojourn_weights(inst);
  for (std::size_t f = 0; f < 2; ++f) {
    CHECK(w.at(f, 0) == 9);
    CHECK(w.at(f, 1) == 10);
    CHECK(w.at(f, 2) == 14);
  }
}

TEST_CASE("first-slot weights reproduce the per-row snapshot") {
  const Instance inst = motivating();
  const WeightTable w = first_slot_weights(inst);
  CHECK(w.at(0, 0) == 8);
  CHECK(w.at(0, 1) == 1);
  CHECK(w.at(0, 2) == 7);
  CHECK(w.at(1, 0) == 1);
  CHECK(w.at(1, 1) == 9);
  CHECK(w.at(1, 2) == 7);
}

TEST_CASE("mobility-aware placement caches the shared favorite everywhere") {
  const Instance inst = motivating();
  const Placement p = mobicacher(inst);
  CHECK(p.cached[0] == std::vector<int>{2});
  CHECK(p.cached[1] == std::vector<int>{2});
  CHECK(utility(inst, p) == 28);
}

TEST_CASE("snapshot baseline splits the caches by the first slot") {
  const Instance inst = motivating();
  const Placement p = femtocacher(inst);
  CHECK(p.cached[0] == std::vector<int>{0});
  CHECK(p.cached[1] == std::vector<int>{1});
  CHECK(evaluate(inst, p).total_cost == 47);
}

TEST_CASE("popularity baseline uses the cost column sums") {
  const Instance inst = motivating();
  CHECK(popularity(inst) == std::vector<double>{9, 10, 14});
  const Placement p = popularity_cacher(inst);
  CHECK(p.cached[0] == std::vector<int>{2});
  CHECK(p.cached[1] == std::vector<int>{2});
}

TEST_CASE("uniform costs make the popularity baseline cache the lowest ids") {
  const Instance inst = parse_instance(
      "stations 2\ncapacities 2 2\nusers 2\ncontents 4\nslots 1\nslot_seconds 20\n"
      "cost 0 0 1\ncost 0 1 1\ncost 0 2 1\ncost 0 3 1\n"
      "cost 1 0 1\ncost 1 1 1\ncost 1 2 1\ncost 1 3 1\n"
      "reach 0 0 0\nreach 0 1 1\n");
  const Placement p = popularity_cacher(inst);
  CHECK(p.cached[0] == std::vector<int>{0, 1});
  CHECK(p.cached[1] == std::vector<int>{0, 1});
}

TEST_CASE("one user and one station collapse popularity onto the greedy") {
  // holds whenever the sojourn time is positive (a zero sojourn zeroes the
  // greedy weights, which then fall back to the id tie-break)
  mctest::TestRng rng(20);
  int checked = 0;
  while (checked < 30) {
    Instance inst = mctest::random_instance(rng);
    if (inst.num_stations() != 1 || inst.num_users != 1) continue;
    if (sojourn_times(inst).at(0, 0) == 0) continue;
    ++checked;
    CHECK(popularity_cacher(inst).cached == mobicacher(inst).cached);
  }
}

TEST_CASE("sojourn counts stay within the horizon and cover non-empty slots") {
  mctest::TestRng rng(19);
  for (int n = 0; n < 50; ++n) {
    const Instance inst = mctest::random_instance(rng);
    const SojournTable table = sojourn_times(inst);
    for (std::size_t i = 0; i < inst.num_users; ++i) {
      int total = 0;
      int covered_slots = 0;
      for (std::size_t f = 0; f < inst.num_stations(); ++f) {
        CHECK(table.at(i, f) >= 0);
        CHECK(table.at(i, f) <= static_cast<int>(inst.num_slots()));
        total += table.at(i, f);
      }
      for (std::size_t t = 0; t < inst.num_slots(); ++t) {
        if (!inst.reachable(t, i).empty()) ++covered_slots;
      }
      CHECK(total >= covered_slots);
    }
  }
}

TEST_CASE("capacity corner cases") {
  const Instance inst = motivating();

  const Instance none = with_uniform_capacity(inst, 0);
  for (Algorithm a : {Algorithm::mobicacher, Algorithm::femtocacher, Algorithm::popularity}) {
    const Placement p = place(none, a);
    CHECK(p.cached[0].empty());
    CHECK(p.cached[1].empty());
  }

  const Instance all = with_uniform_capacity(inst, 5);  // exceeds the library
  for (Algorithm a : {Algorithm::mobicacher, Algorithm::femtocacher, Algorithm::popularity}) {
    const Placement p = place(all, a);
    CHECK(p.cached[0] == std::vector<int>{0, 1, 2});
    CHECK(p.cached[1] == std::vector<int>{0, 1, 2});
  }
}

TEST_CASE("a station nobody reaches in the first slot falls back to lowest ids") {
  const Instance inst = parse_instance(
      "stations 2\ncapacities 2 2\nusers 1\ncontents 4\nslots 2\nslot_seconds 20\n"
      "cost 0 0 1\ncost 0 1 5\ncost 0 2 3\ncost 0 3 2\n"
      "reach 0 0 0\nreach 1 0 1\n");
  const Placement p = femtocacher(inst);
  CHECK(p.cached[0] == std::vector<int>{1, 2});  // user's two best contents
  CHECK(p.cached[1] == std::vector<int>{0, 1});  // all-zero weights, tie-break by id
}

TEST_CASE("single-slot traces collapse the snapshot baseline onto the greedy") {
  mctest::TestRng rng(21);
  for (int n = 0; n < 100; ++n) {
    Instance inst = mctest::random_instance(rng);
    inst.trace.slots.resize(1);
    inst = validate_instance(std::move(inst));
    CHECK(femtocacher(inst).cached == mobicacher(inst).cached);
  }
}

TEST_CASE("top-k selection matches an independent sort oracle") {
  mctest::TestRng rng(22);
  for (int n = 0; n < 300; ++n) {
    const int size = rng.range(1, 40);
    std::vector<double> weights(static_cast<std::size_t>(size));
    for (double& w : weights) w = static_cast<double>(rng.range(0, 99));
    const auto k = static_cast<std::size_t>(rng.range(0, size));

    const std::vector<int> picked = top_contents(weights, k);
    REQUIRE(picked.size() == k);
    CHECK(std::is_sorted(picked.begin(), picked.end()));

    double objective = 0;
    for (int id : picked) objective += weights[static_cast<std::size_t>(id)];
    std::vector<double> sorted = weights;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double oracle = 0;
    for (std::size_t j = 0; j < k; ++j) oracle += sorted[j];
    CHECK(objective == oracle);  // integer weights: exact
  }
}

TEST_CASE("top-k breaks ties by smallest id") {
  const std::vector<double> weights{3, 7, 7, 1, 7};
  CHECK(top_contents(weights, 2) == std::vector<int>{1, 2});
  CHECK(top_contents(weights, 4) == std::vector<int>{0, 1, 2, 4});
  CHECK(top_contents(weights, 0).empty());
  CHECK(top_contents(weights, 9) == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("top-k implementation agrees with the literal iterative loop") {
  mctest::TestRng rng(23);
  for (int n = 0; n < 200; ++n) {
    const Instance inst = mctest::random_instance(rng);
    CHECK(mobicacher(inst).cached == mobicacher_reference(inst).cached);
  }
}

TEST_CASE("placements are invariant under positive cost scaling") {
  mctest::TestRng rng(24);
  for (int n = 0; n < 50; ++n) {
    const Instance inst = mctest::random_instance(rng);
    Instance scaled = inst;
    for (double& v : scaled.costs.values) v *= 3.5;
    CHECK(mobicacher(inst).cached == mobicacher(scaled).cached);
    CHECK(femtocacher(inst).cached == femtocacher(scaled).cached);
    CHECK(popularity_cacher(inst).cached == popularity_cacher(scaled).cached);
  }
}

TEST_CASE("concatenating the trace with itself leaves the greedy unchanged") {
  mctest::TestRng rng(25);
  for (int n = 0; n < 50; ++n) {
    const Instance inst = mctest::random_instance(rng);
    const Instance doubled = mctest::concat_trace_with_self(inst);
    CHECK(mobicacher(inst).cached == mobicacher(doubled).cached);
  }
}

TEST_CASE("every algorithm's output passes placement validation") {
  mctest::TestRng rng(26);
  for (int n = 0; n < 100; ++n) {
    const Instance inst = mctest::random_instance(rng);
    for (Algorithm a : {Algorithm::mobicacher, Algorithm::femtocacher, Algorithm::popularity}) {
      CHECK_NOTHROW(validate_placement(inst, place(inst, a)));
    }
    CHECK_NOTHROW(validate_placement(inst, exact_optimal(inst).placement));
  }
}

TEST_CASE("exhaustive optimum on the two-cell example") {
  const Instance inst = motivating();
  const ExactResult best = exact_optimal(inst);
  CHECK(best.utility == 28);
  CHECK(best.placement.cached[0] == std::vector<int>{2});
  CHECK(best.placement.cached[1] == std::vector<int>{2});
  CHECK(best.candidates == 9);  // 3 full-capacity choices per station
}

TEST_CASE("exhaustive optimum with zero capacity is zero") {
  const Instance inst = with_uniform_capacity(motivating(), 0);
  const ExactResult best = exact_optimal(inst);
  CHECK(best.utility == 0);
  CHECK(best.candidates == 1);
}

TEST_CASE("degenerate instances flow through every algorithm") {
  const Instance bare = parse_instance(
      "stations 0\ncapacities\nusers 0\ncontents 1\nslots 1\nslot_seconds 20\n");
  CHECK(mobicacher(bare).cached.empty());
  CHECK(femtocacher(bare).cached.empty());
  CHECK(popularity_cacher(bare).cached.empty());
  const ExactResult best = exact_optimal(bare);
  CHECK(best.utility == 0);
  CHECK(best.candidates == 1);
  CHECK(utility(bare, mobicacher(bare)) == 0);
}

TEST_CASE("exhaustive optimum matches an independent recursive enumeration") {
  mctest::TestRng rng(27);
  for (int n = 0; n < 40; ++n) {
    const Instance inst = mctest::random_instance(rng);
    CHECK(exact_optimal(inst).utility == mctest::enumerate_best_utility(inst));
  }
}

TEST_CASE("greedy equals the optimum on single-station instances") {
  mctest::TestRng rng(28);
  int checked = 0;
  while (checked < 50) {
    Instance inst = mctest::random_instance(rng);
    if (inst.num_stations() != 1) continue;
    ++checked;
    CHECK(utility(inst, mobicacher(inst)) == exact_optimal(inst).utility);
  }
}

TEST_CASE("enumeration refuses when the search space exceeds the budget") {
  const Instance inst = motivating();
  try {
    exact_optimal(inst, 1);
    FAIL("expected budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::budget);
    // (1 + 3) choices per station, squared
    CHECK(std::string(e.what()).find("16") != std::string::npos);
  }
}

TEST_CASE("approximation report on the two-cell example is exactly tight") {
  const ApproximationReport r = approximation_report(motivating());
  CHECK(r.greedy_utility == 28);
  CHECK(r.optimal_utility == 28);
  CHECK(r.max_degree == 1);
  CHECK(r.ratio == 1.0);
}

TEST_CASE("approximation report with all-zero costs reports ratio 1") {
  Instance inst = motivating();
  std::fill(inst.costs.values.begin(), inst.costs.values.end(), 0.0);
  const ApproximationReport r = approximation_report(inst);
  CHECK(r.greedy_utility == 0);
  CHECK(r.optimal_utility == 0);
  CHECK(r.ratio == 1.0);
}

TEST_CASE("worst-case bound holds on random overlapping instances") {
  mctest::TestRng rng(29);
  for (int n = 0; n < 100; ++n) {
    const Instance inst = mctest::random_instance(rng);
    const ApproximationReport r = approximation_report(inst);
    CHECK(r.optimal_utility <= static_cast<double>(r.max_degree) * r.greedy_utility);
  }
}

TEST_CASE("algorithm names parse and reject junk") {
  CHECK(parse_algorithm_list("mobicacher,exact") ==
        std::vector<Algorithm>{Algorithm::mobicacher, Algorithm::exact});
  CHECK_THROWS_AS(parse_algorithm_list("mobicacher,bogus"), Error);
  CHECK_THROWS_AS(parse_algorithm_list("exact,exact"), Error);
  CHECK(algorithm_name(Algorithm::popularity) == "popularity");
  CHECK_THROWS_AS(place(motivating(), Algorithm::exact), Error);
}
