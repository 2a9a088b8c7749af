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
#include <string>
#include <vector>

#include "placement.hpp"
#include "traces.hpp"

namespace mobicache {

// One experiment grid: an instance source (file or seeded synthetic),
// algorithms, uniform capacities and seeds. Runners return the complete
// results file as text: '#' manifest lines, a column-name header, then one
// space-separated row per grid cell, in deterministic grid order. Reruns
// with an identical config produce byte-identical text.
struct ExperimentConfig {
  std::optional<std::string> instance_path;
  std::optional<SyntheticConfig> synthetic;  // seed field replaced per run
  std::vector<std::uint64_t> seeds = {0};
  std::vector<int> capacities;
  std::vector<Algorithm> algorithms;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

// Utility per capacity x seed x algorithm. Rows where the exact solver
// exceeds its budget are marked and the run continues.
std::string run_capacity_sweep(const ExperimentConfig& config);

// Cumulative utility per slot for each algorithm at one capacity, placements
// computed once for the whole horizon. Uses the first seed.
std::string run_time_series(const ExperimentConfig& config, int capacity);

// Greedy-vs-optimal ratio per seed, with a worst-case summary and histogram.
// Instances whose exhaustive search exceeds the budget are skipped and
// counted. Uses the first capacity (or the instance's own, if none given).
std::string run_ratio_study(const ExperimentConfig& config);

// Per-seed utilities for >= 2 algorithms over >= 10 seeds, with mean,
// standard deviation and paired per-seed differences per algorithm pair.
std::string run_comparison(const ExperimentConfig& config);

}  // namespace mobicache
