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

#include "placement.hpp"

#include <algorithm>
#include <numeric>

#include "metrics.hpp"
#include "text_format.hpp"

namespace mobicache {

namespace {

// Lexicographic successor of a sorted k-combination of {0..n-1}; false after
// the last one.
bool next_combination(std::vector<int>& combination, int n) {
  const int k = static_cast<int>(combination.size());
  for (int i = k - 1; i >= 0; --i) {
    if (combination[i] < n - k + i) {
      ++combination[i];
      for (int j = i + 1; j < k; ++j) combination[j] = combination[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void first_combination(std::vector<int>& combination, std::size_t k) {
  combination.resize(k);
  std::iota(combination.begin(), combination.end(), 0);
}

long double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0L;
  long double result = 1.0L;
  for (int j = 1; j <= k; ++j) {
    result = result * static_cast<long double>(n - k + j) / static_cast<long double>(j);
  }
  return result;
}

std::size_t station_pick(const Instance& instance, std::size_t station) {
  const auto capacity = static_cast<std::size_t>(instance.capacities[station]);
  return std::min(capacity, instance.library_size);
}

}  // namespace

SojournTable sojourn_times(const Instance& instance) {
  SojournTable table;
  table.users = instance.num_users;
  table.stations = instance.num_stations();
  table.counts.assign(table.users * table.stations, 0);
  for (const auto& slot : instance.trace.slots) {
    for (std::size_t i = 0; i < slot.size(); ++i) {
      for (int f : slot[i]) ++table.counts[i * table.stations + f];
    }
  }
  return table;
}

WeightTable sojourn_weights(const Instance& instance) {
  const SojournTable sojourn = sojourn_times(instance);
  WeightTable weights;
  weights.stations = instance.num_stations();
  weights.contents = instance.library_size;
  weights.values.assign(weights.stations * weights.contents, 0.0);
  for (std::size_t f = 0; f < weights.stations; ++f) {
    for (std::size_t i = 0; i < instance.num_users; ++i) {
      const int t = sojourn.at(i, f);
      if (t == 0) continue;
      for (std::size_t l = 0; l < weights.contents; ++l) {
        weights.values[f * weights.contents + l] +=
            static_cast<double>(t) * instance.costs.at(i, l);
      }
    }
  }
  return weights;
}

WeightTable first_slot_weights(const Instance& instance) {
  WeightTable weights;
  weights.stations = instance.num_stations();
  weights.contents = instance.library_size;
  weights.values.assign(weights.stations * weights.contents, 0.0);
  const auto& first_slot = instance.trace.slots.front();
  for (std::size_t f = 0; f < weights.stations; ++f) {
    for (std::size_t i = 0; i < instance.num_users; ++i) {
      const auto& reach = first_slot[i];
      if (!std::binary_search(reach.begin(), reach.end(), static_cast<int>(f))) continue;
      for (std::size_t l = 0; l < weights.contents; ++l) {
        weights.values[f * weights.contents + l] += instance.costs.at(i, l);
      }
    }
  }
  return weights;
}

std::vector<double> popularity(const Instance& instance) {
  std::vector<double> result(instance.library_size, 0.0);
  for (std::size_t i = 0; i < instance.num_users; ++i) {
    for (std::size_t l = 0; l < instance.library_size; ++l) {
      result[l] += instance.costs.at(i, l);
    }
  }
  return result;
}

std::vector<int> top_contents(std::span<const double> weights, std::size_t k) {
  k = std::min(k, weights.size());
  std::vector<int> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (weights[a] != weights[b]) return weights[a] > weights[b];
    return a < b;
  });
  order.resize(k);
  std::sort(order.begin(), order.end());
  return order;
}

std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::mobicacher: return "mobicacher";
    case Algorithm::femtocacher: return "femtocacher";
    case Algorithm::popularity: return "popularity";
    case Algorithm::exact: return "exact";
  }
  return "unknown";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
  if (name == "mobicacher") return Algorithm::mobicacher;
  if (name == "femtocacher") return Algorithm::femtocacher;
  if (name == "popularity") return Algorithm::popularity;
  if (name == "exact") return Algorithm::exact;
  return std::nullopt;
}

std::vector<Algorithm> parse_algorithm_list(std::string_view csv) {
  std::vector<Algorithm> result;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    const std::string_view name = csv.substr(start, end - start);
    const auto algorithm = algorithm_from_name(name);
    if (!algorithm) {
      throw Error(Error::Kind::invalid_argument,
                  "unknown algorithm '" + std::string(name) +
                      "' (expected mobicacher, femtocacher, popularity or exact)");
    }
    if (std::find(result.begin(), result.end(), *algorithm) != result.end()) {
      throw Error(Error::Kind::invalid_argument,
                  "duplicate algorithm '" + std::string(name) + "'");
    }
    result.push_back(*algorithm);
    start = end + 1;
  }
  return result;
}

namespace {

Placement select_by_weights(const Instance& instance, const WeightTable& weights) {
  Placement placement = empty_placement(instance);
  for (std::size_t f = 0; f < instance.num_stations(); ++f) {
    placement.cached[f] = top_contents(weights.row(f), station_pick(instance, f));
  }
  return placement;
}

}  // namespace

Placement mobicacher(const Instance& instance) {
  return select_by_weights(instance, sojourn_weights(instance));
}

Placement mobicacher_reference(const Instance& instance) {
  const WeightTable weights = sojourn_weights(instance);
  Placement placement = empty_placement(instance);
  for (std::size_t f = 0; f < instance.num_stations(); ++f) {
    std::vector<char> taken(instance.library_size, 0);
    const std::size_t pick = station_pick(instance, f);
    while (placement.cached[f].size() < pick) {
      int best = -1;
      double best_weight = 0;
      for (std::size_t l = 0; l < instance.library_size; ++l) {
        if (taken[l]) continue;
        const double w = weights.at(f, l);
        if (best < 0 || w > best_weight) {
          best = static_cast<int>(l);
          best_weight = w;
        }
      }
      taken[best] = 1;
      placement.cached[f].push_back(best);
    }
    std::sort(placement.cached[f].begin(), placement.cached[f].end());
  }
  return placement;
}

Placement femtocacher(const Instance& instance) {
  return select_by_weights(instance, first_slot_weights(instance));
}

Placement popularity_cacher(const Instance& instance) {
  const std::vector<double> global = popularity(instance);
  Placement placement = empty_placement(instance);
  for (std::size_t f = 0; f < instance.num_stations(); ++f) {
    placement.cached[f] = top_contents(global, station_pick(instance, f));
  }
  return placement;
}

Placement place(const Instance& instance, Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::mobicacher: return mobicacher(instance);
    case Algorithm::femtocacher: return femtocacher(instance);
    case Algorithm::popularity: return popularity_cacher(instance);
    case Algorithm::exact:
      throw Error(Error::Kind::invalid_argument,
                  "the exact solver needs an enumeration budget; call exact_optimal");
  }
  throw Error(Error::Kind::internal, "unreachable");
}

ExactResult exact_optimal(const Instance& instance, std::uint64_t budget) {
  const int library = static_cast<int>(instance.library_size);
  const std::size_t n_stations = instance.num_stations();

  // Search-space size counts every capacity-feasible placement, including
  // sub-capacity subsets.
  long double space = 1.0L;
  for (std::size_t f = 0; f < n_stations; ++f) {
    long double per_station = 0.0L;
    const int kmax = static_cast<int>(station_pick(instance, f));
    for (int k = 0; k <= kmax; ++k) per_station += binomial(library, k);
    space *= per_station;
  }
  if (space > static_cast<long double>(budget)) {
    throw Error(Error::Kind::budget,
                "exact enumeration requires " + format_double(static_cast<double>(space)) +
                    " candidate placements, budget is " + std::to_string(budget));
  }

  std::vector<std::vector<int>> combinations(n_stations);
  for (std::size_t f = 0; f < n_stations; ++f) {
    first_combination(combinations[f], station_pick(instance, f));
  }

  ExactResult result;
  double best = -1.0;
  bool more = true;
  while (more) {
    const double u = utility(instance, combinations);
    ++result.candidates;
    if (u > best) {
      best = u;
      result.placement.cached = combinations;
    }
    more = false;
    for (std::size_t j = n_stations; j-- > 0;) {
      if (next_combination(combinations[j], library)) {
        more = true;
        break;
      }
      first_combination(combinations[j], station_pick(instance, j));
    }
  }
  result.utility = best;
  return result;
}

ApproximationReport approximation_report(const Instance& instance, std::uint64_t budget) {
  ApproximationReport report;
  report.max_degree = max_degree(instance);
  report.greedy_utility = utility(instance, mobicacher(instance));
  report.optimal_utility = exact_optimal(instance, budget).utility;
  if (report.optimal_utility > 0) {
    const double bound = static_cast<double>(report.max_degree) * report.greedy_utility;
    if (report.optimal_utility > bound * (1 + 1e-9) + 1e-12) {
      throw Error(Error::Kind::internal,
                  "approximation bound violated: optimal " +
                      format_double(report.optimal_utility) + " > " +
                      std::to_string(report.max_degree) + " * greedy " +
                      format_double(report.greedy_utility));
    }
    report.ratio = report.optimal_utility / std::max(report.greedy_utility, kRatioEpsilon);
  } else {
    report.ratio = 1.0;
  }
  return report;
}

}  // namespace mobicache
