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

#include <cstddef>
#include <vector>

#include "error.hpp"

namespace mobicache {

// Dense |users| x |contents| matrix of normalized costs: the expected
// backhaul cost per slot of a user requesting a content while it is not
// cached at any reachable station.
struct CostMatrix {
  std::size_t users = 0;
  std::size_t contents = 0;
  std::vector<double> values;  // row-major

  static CostMatrix zeros(std::size_t users, std::size_t contents) {
    return CostMatrix{users, contents, std::vector<double>(users * contents, 0.0)};
  }

  double at(std::size_t user, std::size_t content) const {
    return values[user * contents + content];
  }
  double& at(std::size_t user, std::size_t content) {
    return values[user * contents + content];
  }
};

// Per slot and user, the sorted set of station ids whose signal the user
// senses. A user with an empty set that slot is out of coverage. Slot
// indices are 0-based internally and in files; reports print them 1-based.
struct ReachabilityTrace {
  std::vector<std::vector<std::vector<int>>> slots;  // [slot][user] -> ids
  double slot_seconds = 20.0;

  std::size_t num_slots() const { return slots.size(); }
};

// A complete problem: stations with capacities, users, a content library
// identified by ids 0..library_size-1, per-pair normalized costs and the
// slotted reachability trace. Treated as immutable once validated.
struct Instance {
  std::vector<int> capacities;  // per station, counts of unit-size contents
  std::size_t num_users = 0;
  std::size_t library_size = 0;
  CostMatrix costs;
  ReachabilityTrace trace;

  std::size_t num_stations() const { return capacities.size(); }
  std::size_t num_slots() const { return trace.num_slots(); }

  const std::vector<int>& reachable(std::size_t slot, std::size_t user) const {
    return trace.slots[slot][user];
  }
};

// Per station, the sorted set of cached content ids.
struct Placement {
  std::vector<std::vector<int>> cached;
};

// Checks every structural invariant, normalizing reachable sets to sorted
// unique ids. Throws Error{validation} naming the offending slot/user/station.
Instance validate_instance(Instance instance);

// Checks content-id ranges and per-station capacity, normalizing cached sets
// to sorted unique ids. Throws Error{validation} naming the station.
Placement validate_placement(const Instance& instance, Placement placement);

// Copy of the instance with every station capacity replaced.
Instance with_uniform_capacity(const Instance& instance, int capacity);

Placement empty_placement(const Instance& instance);

}  // namespace mobicache
