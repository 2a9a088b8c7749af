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

#include "metrics.hpp"

#include <string>

namespace mobicache {

namespace {

// Shared inner loop of evaluate()/utility(). Marks the reachable cached union
// per (slot, user), then walks content ids in ascending order, so both entry
// points sum in the same sequence and agree bitwise.
void eval_slots(const Instance& instance, const std::vector<std::vector<int>>& cached,
                std::vector<double>* slot_utility, std::vector<double>* slot_cost,
                std::uint64_t* hits) {
  const std::size_t n_slots = instance.num_slots();
  const std::size_t n_users = instance.num_users;
  const std::size_t library = instance.library_size;
  std::vector<char> marked(library, 0);
  std::vector<int> touched;
  touched.reserve(library);

  for (std::size_t t = 0; t < n_slots; ++t) {
    double su = 0;
    double sc = 0;
    for (std::size_t i = 0; i < n_users; ++i) {
      for (int f : instance.trace.slots[t][i]) {
        for (int l : cached[f]) {
          if (!marked[l]) {
            marked[l] = 1;
            touched.push_back(l);
          }
        }
      }
      if (slot_cost != nullptr) {
        for (std::size_t l = 0; l < library; ++l) {
          const double c = instance.costs.at(i, l);
          if (marked[l]) {
            su += c;
          } else {
            sc += c;
          }
        }
      } else {
        for (std::size_t l = 0; l < library; ++l) {
          if (marked[l]) su += instance.costs.at(i, l);
        }
      }
      if (hits != nullptr) *hits += touched.size();
      for (int l : touched) marked[l] = 0;
      touched.clear();
    }
    if (slot_utility != nullptr) (*slot_utility)[t] = su;
    if (slot_cost != nullptr) (*slot_cost)[t] = sc;
  }
}

}  // namespace

std::vector<int> reachable_cached_set(const Instance& instance, const Placement& placement,
                                      std::size_t slot, std::size_t user) {
  if (slot >= instance.num_slots()) {
    throw Error(Error::Kind::invalid_argument,
                "slot index " + std::to_string(slot) + " out of range (" +
                    std::to_string(instance.num_slots()) + " slots)");
  }
  if (user >= instance.num_users) {
    throw Error(Error::Kind::invalid_argument,
                "user index " + std::to_string(user) + " out of range (" +
                    std::to_string(instance.num_users) + " users)");
  }
  std::vector<char> marked(instance.library_size, 0);
  for (int f : instance.trace.slots[slot][user]) {
    for (int l : placement.cached[f]) marked[l] = 1;
  }
  std::vector<int> result;
  for (std::size_t l = 0; l < instance.library_size; ++l) {
    if (marked[l]) result.push_back(static_cast<int>(l));
  }
  return result;
}

EvaluationReport evaluate(const Instance& instance, const Placement& placement) {
  EvaluationReport report;
  const std::size_t n_slots = instance.num_slots();
  report.per_slot_utility.assign(n_slots, 0.0);
  report.per_slot_cost.assign(n_slots, 0.0);
  eval_slots(instance, placement.cached, &report.per_slot_utility, &report.per_slot_cost,
             &report.hits);

  for (std::size_t t = 0; t < n_slots; ++t) {
    report.utility += report.per_slot_utility[t];
    report.total_cost += report.per_slot_cost[t];
  }

  double all_costs = 0;
  for (std::size_t i = 0; i < instance.num_users; ++i) {
    for (std::size_t l = 0; l < instance.library_size; ++l) {
      all_costs += instance.costs.at(i, l);
    }
  }
  for (std::size_t t = 0; t < n_slots; ++t) report.cost_constant += all_costs;

  report.max_degree = max_degree(instance);
  const std::uint64_t triples = static_cast<std::uint64_t>(n_slots) * instance.num_users *
                                instance.library_size;
  report.misses = triples - report.hits;
  return report;
}

double utility(const Instance& instance, const std::vector<std::vector<int>>& cached) {
  std::vector<double> per_slot(instance.num_slots(), 0.0);
  eval_slots(instance, cached, &per_slot, nullptr, nullptr);
  double total = 0;
  for (double u : per_slot) total += u;
  return total;
}

double utility(const Instance& instance, const Placement& placement) {
  return utility(instance, placement.cached);
}

int max_degree(const Instance& instance) {
  std::size_t degree = 0;
  for (const auto& slot : instance.trace.slots) {
    for (const auto& reach : slot) {
      if (reach.size() > degree) degree = reach.size();
    }
  }
  return degree == 0 ? 1 : static_cast<int>(degree);
}

}  // namespace mobicache
