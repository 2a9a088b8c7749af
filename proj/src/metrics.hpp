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
#include <vector>

#include "model.hpp"

namespace mobicache {

// Outcome of evaluating a placement against an instance.
//
// utility      : cost saved by caching, summed over slots, users and the
//                contents reachable from each user's stations.
// total_cost   : cost of everything that still crosses the backhaul.
// cost_constant: sum of all normalized costs over the horizon; independent
//                of the placement, so utility + total_cost == cost_constant.
// hits/misses  : counts of (slot, user, content) triples served from cache
//                vs. over the backhaul.
//
// Summation order is fixed (slot-major, then user, then content id) so equal
// inputs produce bitwise-equal floating-point results.
struct EvaluationReport {
  double utility = 0;
  double total_cost = 0;
  double cost_constant = 0;
  std::vector<double> per_slot_utility;
  std::vector<double> per_slot_cost;
  int max_degree = 1;
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
};

// Union of the cached sets of all stations the user reaches in the slot,
// sorted ascending. Throws Error{invalid_argument} on out-of-range indices.
std::vector<int> reachable_cached_set(const Instance& instance, const Placement& placement,
                                      std::size_t slot, std::size_t user);

EvaluationReport evaluate(const Instance& instance, const Placement& placement);

// Utility only, identical summation order as evaluate(). The raw-set overload
// skips the Placement wrapper so enumeration loops avoid per-candidate copies.
double utility(const Instance& instance, const Placement& placement);
double utility(const Instance& instance, const std::vector<std::vector<int>>& cached);

// Largest number of stations any user senses in any slot. Returns 1 for an
// all-empty trace so ratio reports never divide by zero.
int max_degree(const Instance& instance);

}  // namespace mobicache
