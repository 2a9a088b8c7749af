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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "model.hpp"

namespace mobicache {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

// Guards the ratio denominator when the greedy utility is zero.
inline constexpr double kRatioEpsilon = 1e-12;

// T(i, f): number of slots during which user i can reach station f.
struct SojournTable {
  std::size_t users = 0;
  std::size_t stations = 0;
  std::vector<int> counts;  // row-major users x stations

  int at(std::size_t user, std::size_t station) const {
    return counts[user * stations + station];
  }
};

// w(f, l): per-station selection weight of a content. For the sojourn-time
// weighting this is sum_i T(i,f) * c(i,l); a station's best cache is the
// capacity-many contents with the largest weights.
struct WeightTable {
  std::size_t stations = 0;
  std::size_t contents = 0;
  std::vector<double> values;  // row-major stations x contents

  double at(std::size_t station, std::size_t content) const {
    return values[station * contents + content];
  }
  std::span<const double> row(std::size_t station) const {
    return std::span<const double>(values).subspan(station * contents, contents);
  }
};

SojournTable sojourn_times(const Instance& instance);

// Sojourn-weighted selection weights used by the mobility-aware placement.
WeightTable sojourn_weights(const Instance& instance);

// First-slot weights: w(f, l) = sum of c(i, l) over users reaching f in the
// first slot. What a mobility-unaware snapshot placement optimizes.
WeightTable first_slot_weights(const Instance& instance);

// Global popularity p(l) = sum_i c(i, l).
std::vector<double> popularity(const Instance& instance);

// Ids of the k largest-weight entries, ties broken by smallest id, returned
// sorted ascending. k is clamped to the table size.
std::vector<int> top_contents(std::span<const double> weights, std::size_t k);

enum class Algorithm {
  mobicacher,
  femtocacher,
  popularity,
  exact,
};

std::string_view algorithm_name(Algorithm algorithm);
std::optional<Algorithm> algorithm_from_name(std::string_view name);
// Parses a comma-separated list; rejects unknown and duplicate names.
std::vector<Algorithm> parse_algorithm_list(std::string_view csv);

// Per-station greedy over sojourn-weighted costs. Equivalent to iteratively
// picking the argmax content until the cache fills, but implemented as one
// top-k selection per station (the objective is modular, so both agree).
Placement mobicacher(const Instance& instance);

// Literal iterative argmax loop; kept for differential testing against the
// top-k implementation.
Placement mobicacher_reference(const Instance& instance);

// Snapshot baseline: same selection driven by first-slot weights only.
Placement femtocacher(const Instance& instance);

// Every station caches the globally most popular contents.
Placement popularity_cacher(const Instance& instance);

// Dispatch for the three heuristics; Algorithm::exact is not accepted here
// because it needs a budget (use exact_optimal).
Placement place(const Instance& instance, Algorithm algorithm);

struct ExactResult {
  Placement placement;
  double utility = 0;
  std::uint64_t candidates = 0;  // placements actually enumerated
};

// Exhaustive search over all full-capacity placements (utility is monotone,
// so a maximizer always exists there). Refuses with Error{budget} when the
// capacity-feasible search space exceeds the budget. Ties resolve to the
// lexicographically smallest placement.
ExactResult exact_optimal(const Instance& instance,
                          std::uint64_t budget = kDefaultEnumerationBudget);

struct ApproximationReport {
  double greedy_utility = 0;
  double optimal_utility = 0;
  int max_degree = 1;
  double ratio = 1.0;  // optimal / greedy, 1.0 when the optimum is zero
};

// Compares the greedy placement against the exhaustive optimum and checks
// the worst-case bound optimal <= max_degree * greedy.
ApproximationReport approximation_report(const Instance& instance,
                                         std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace mobicache
