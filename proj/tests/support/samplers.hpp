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

// Test-side instance samplers and brute-force oracles. Everything here is
// written against the data model only, sharing no evaluation or selection
// code with the library, so it can serve as an independent check.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "model.hpp"

namespace mctest {

// Deterministic test RNG. Modulo bias is irrelevant at test sample sizes.
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  int range(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

// Direct transcription of the caching-utility definition using std::set.
inline double naive_utility(const mobicache::Instance& instance,
                            const mobicache::Placement& placement) {
  double total = 0;
  for (std::size_t t = 0; t < instance.num_slots(); ++t) {
    for (std::size_t i = 0; i < instance.num_users; ++i) {
      std::set<int> reachable_cached;
      for (int f : instance.trace.slots[t][i]) {
        for (int l : placement.cached[f]) reachable_cached.insert(l);
      }
      for (int l : reachable_cached) total += instance.costs.at(i, static_cast<std::size_t>(l));
    }
  }
  return total;
}

inline double naive_total_cost(const mobicache::Instance& instance,
                               const mobicache::Placement& placement) {
  double total = 0;
  for (std::size_t t = 0; t < instance.num_slots(); ++t) {
    for (std::size_t i = 0; i < instance.num_users; ++i) {
      std::set<int> reachable_cached;
      for (int f : instance.trace.slots[t][i]) {
        for (int l : placement.cached[f]) reachable_cached.insert(l);
      }
      for (std::size_t l = 0; l < instance.library_size; ++l) {
        if (reachable_cached.count(static_cast<int>(l)) == 0) total += instance.costs.at(i, l);
      }
    }
  }
  return total;
}

// Best utility over ALL capacity-feasible placements, sub-capacity subsets
// included, via bitmask recursion. Only usable on tiny instances.
inline double enumerate_best_utility(const mobicache::Instance& instance) {
  const std::size_t n_stations = instance.num_stations();
  const int library = static_cast<int>(instance.library_size);
  mobicache::Placement current = mobicache::empty_placement(instance);
  double best = 0;

  auto recurse = [&](auto&& self, std::size_t station) -> void {
    if (station == n_stations) {
      best = std::max(best, naive_utility(instance, current));
      return;
    }
    const int capacity = instance.capacities[station];
    for (std::uint32_t mask = 0; mask < (1u << library); ++mask) {
      if (std::popcount(mask) > capacity) continue;
      current.cached[station].clear();
      for (int l = 0; l < library; ++l) {
        if (mask & (1u << l)) current.cached[station].push_back(l);
      }
      self(self, station + 1);
    }
    current.cached[station].clear();
  };
  recurse(recurse, 0);
  return best;
}

// Random instance within the oracle-friendly bounds: <= 3 stations,
// <= 4 users, <= 6 contents, <= 4 slots, capacities <= 2, reachable sets of
// up to 3 stations, integer costs in 0..9.
inline mobicache::Instance random_instance(TestRng& rng) {
  const int stations = rng.range(1, 3);
  const int users = rng.range(1, 4);
  const int contents = rng.range(1, 6);
  const int slots = rng.range(1, 4);

  mobicache::Instance instance;
  instance.capacities.resize(static_cast<std::size_t>(stations));
  for (auto& c : instance.capacities) c = rng.range(0, 2);
  instance.num_users = static_cast<std::size_t>(users);
  instance.library_size = static_cast<std::size_t>(contents);
  instance.costs = mobicache::CostMatrix::zeros(instance.num_users, instance.library_size);
  for (double& v : instance.costs.values) v = static_cast<double>(rng.range(0, 9));

  instance.trace.slot_seconds = 20.0;
  instance.trace.slots.assign(static_cast<std::size_t>(slots),
                              std::vector<std::vector<int>>(instance.num_users));
  std::vector<int> ids(static_cast<std::size_t>(stations));
  for (auto& slot : instance.trace.slots) {
    for (auto& reach : slot) {
      for (int f = 0; f < stations; ++f) ids[static_cast<std::size_t>(f)] = f;
      const int degree = rng.range(0, std::min(3, stations));
      for (int k = 0; k < degree; ++k) {
        const auto j = static_cast<std::size_t>(k) + rng.below(static_cast<std::uint64_t>(stations - k));
        std::swap(ids[static_cast<std::size_t>(k)], ids[j]);
        reach.push_back(ids[static_cast<std::size_t>(k)]);
      }
    }
  }
  return mobicache::validate_instance(std::move(instance));
}

// Random capacity-feasible placement for the instance.
inline mobicache::Placement random_placement(TestRng& rng, const mobicache::Instance& instance) {
  mobicache::Placement placement = mobicache::empty_placement(instance);
  const int library = static_cast<int>(instance.library_size);
  std::vector<int> ids(static_cast<std::size_t>(library));
  for (std::size_t f = 0; f < instance.num_stations(); ++f) {
    for (int l = 0; l < library; ++l) ids[static_cast<std::size_t>(l)] = l;
    const int size = rng.range(0, std::min(instance.capacities[f], library));
    for (int k = 0; k < size; ++k) {
      const auto j = static_cast<std::size_t>(k) + rng.below(static_cast<std::uint64_t>(library - k));
      std::swap(ids[static_cast<std::size_t>(k)], ids[j]);
      placement.cached[f].push_back(ids[static_cast<std::size_t>(k)]);
    }
  }
  return mobicache::validate_placement(instance, std::move(placement));
}

// The trace played twice back to back.
inline mobicache::Instance concat_trace_with_self(const mobicache::Instance& instance) {
  mobicache::Instance doubled = instance;
  doubled.trace.slots.insert(doubled.trace.slots.end(), instance.trace.slots.begin(),
                             instance.trace.slots.end());
  return mobicache::validate_instance(std::move(doubled));
}

}  // namespace mctest
