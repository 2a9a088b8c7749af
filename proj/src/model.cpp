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

#include "model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mobicache {

namespace {

void sort_unique(std::vector<int>& ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

[[noreturn]] void fail(const std::string& message) {
  throw Error(Error::Kind::validation, message);
}

}  // namespace

Instance validate_instance(Instance instance) {
  if (instance.library_size == 0) {
    fail("library must contain at least one content");
  }
  for (std::size_t f = 0; f < instance.capacities.size(); ++f) {
    if (instance.capacities[f] < 0) {
      fail("station " + std::to_string(f) + ": negative capacity " +
           std::to_string(instance.capacities[f]));
    }
  }

  const CostMatrix& costs = instance.costs;
  if (costs.users != instance.num_users || costs.contents != instance.library_size ||
      costs.values.size() != costs.users * costs.contents) {
    fail("cost matrix dimension mismatch: have " + std::to_string(costs.users) + "x" +
         std::to_string(costs.contents) + ", instance declares " +
         std::to_string(instance.num_users) + " users and " +
         std::to_string(instance.library_size) + " contents");
  }
  for (std::size_t i = 0; i < costs.users; ++i) {
    for (std::size_t l = 0; l < costs.contents; ++l) {
      const double v = costs.at(i, l);
      if (!std::isfinite(v)) {
        fail("cost(user " + std::to_string(i) + ", content " + std::to_string(l) +
             ") is not finite");
      }
      if (v < 0) {
        fail("cost(user " + std::to_string(i) + ", content " + std::to_string(l) +
             ") is negative");
      }
    }
  }

  ReachabilityTrace& trace = instance.trace;
  if (trace.slots.empty()) {
    fail("empty trace: at least one slot is required");
  }
  if (!std::isfinite(trace.slot_seconds) || trace.slot_seconds <= 0) {
    fail("slot_seconds must be positive and finite");
  }
  const int n_stations = static_cast<int>(instance.num_stations());
  for (std::size_t t = 0; t < trace.slots.size(); ++t) {
    auto& slot = trace.slots[t];
    if (slot.size() != instance.num_users) {
      fail("slot " + std::to_string(t) + " has " + std::to_string(slot.size()) +
           " user records, expected " + std::to_string(instance.num_users));
    }
    for (std::size_t i = 0; i < slot.size(); ++i) {
      sort_unique(slot[i]);
      for (int f : slot[i]) {
        if (f < 0 || f >= n_stations) {
          fail("slot " + std::to_string(t) + ", user " + std::to_string(i) +
               ": unknown station id " + std::to_string(f) + " (instance has " +
               std::to_string(n_stations) + " stations)");
        }
      }
    }
  }
  return instance;
}

Placement validate_placement(const Instance& instance, Placement placement) {
  if (placement.cached.size() != instance.num_stations()) {
    fail("placement covers " + std::to_string(placement.cached.size()) +
         " stations, instance has " + std::to_string(instance.num_stations()));
  }
  const int library = static_cast<int>(instance.library_size);
  for (std::size_t f = 0; f < placement.cached.size(); ++f) {
    auto& cached = placement.cached[f];
    sort_unique(cached);
    for (int l : cached) {
      if (l < 0 || l >= library) {
        fail("station " + std::to_string(f) + ": content id " + std::to_string(l) +
             " out of range (library size " + std::to_string(library) + ")");
      }
    }
    if (cached.size() > static_cast<std::size_t>(instance.capacities[f])) {
      fail("station " + std::to_string(f) + ": " + std::to_string(cached.size()) +
           " cached contents exceed capacity " + std::to_string(instance.capacities[f]));
    }
  }
  return placement;
}

Instance with_uniform_capacity(const Instance& instance, int capacity) {
  if (capacity < 0) {
    fail("negative capacity " + std::to_string(capacity));
  }
  Instance copy = instance;
  std::fill(copy.capacities.begin(), copy.capacities.end(), capacity);
  return copy;
}

Placement empty_placement(const Instance& instance) {
  return Placement{std::vector<std::vector<int>>(instance.num_stations())};
}

}  // namespace mobicache
