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

#include "experiment.hpp"

#include <algorithm>
#include <cmath>

#include "metrics.hpp"
#include "text_format.hpp"
#include "version.hpp"

namespace mobicache {

namespace {

void check_config(const ExperimentConfig& config) {
  if (config.instance_path.has_value() == config.synthetic.has_value()) {
    throw Error(Error::Kind::invalid_argument,
                "exactly one instance source (file or synthetic) must be set");
  }
  if (config.algorithms.empty()) {
    throw Error(Error::Kind::invalid_argument, "at least one algorithm is required");
  }
  if (config.seeds.empty()) {
    throw Error(Error::Kind::invalid_argument, "at least one seed is required");
  }
  for (int c : config.capacities) {
    if (c < 0) {
      throw Error(Error::Kind::invalid_argument, "negative capacity in sweep");
    }
  }
}

// File sources ignore the seed grid: algorithms are deterministic, so extra
// seeds would only duplicate rows.
std::vector<std::uint64_t> effective_seeds(const ExperimentConfig& config) {
  if (config.instance_path) return {config.seeds.front()};
  return config.seeds;
}

Instance make_instance(const ExperimentConfig& config, std::uint64_t seed) {
  if (config.instance_path) return load_instance(*config.instance_path);
  SyntheticConfig synth = *config.synthetic;
  synth.seed = seed;
  return generate_synthetic(synth);
}

std::string join_u64(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(values[k]);
  }
  return out;
}

std::string join_int(const std::vector<int>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(values[k]);
  }
  return out;
}

std::string join_algorithms(const std::vector<Algorithm>& algorithms) {
  std::string out;
  for (std::size_t k = 0; k < algorithms.size(); ++k) {
    if (k > 0) out += ',';
    out += algorithm_name(algorithms[k]);
  }
  return out;
}

std::string manifest(const char* verb, const ExperimentConfig& config) {
  std::string out;
  out += std::string("# mobicache ") + kVersion + " " + verb + "\n";
  if (config.instance_path) {
    out += "# source file " + *config.instance_path + "\n";
  } else {
    const SyntheticConfig& s = *config.synthetic;
    out += "# source synthetic stations=" + std::to_string(s.stations) +
           " users=" + std::to_string(s.users) + " contents=" + std::to_string(s.contents) +
           " slots=" + std::to_string(s.slots) + " grid=" + std::to_string(s.grid_width) +
           "x" + std::to_string(s.grid_height) +
           " stations_per_cell=" + std::to_string(s.stations_per_cell) +
           " stay_probability=" + format_double(s.stay_probability) +
           " zipf_exponent=" + format_double(s.zipf_exponent) +
           " preference_noise=" + format_double(s.preference_noise) + "\n";
  }
  out += "# algorithms " + join_algorithms(config.algorithms) + "\n";
  if (!config.capacities.empty()) {
    out += "# capacities " + join_int(config.capacities) + "\n";
  }
  out += "# seeds " + join_u64(effective_seeds(config)) + "\n";
  out += "# budget " + std::to_string(config.budget) + "\n";
  return out;
}

struct AlgoRun {
  bool ok = false;  // false when the exact solver exceeded its budget
  EvaluationReport report;
};

AlgoRun run_algorithm(const Instance& instance, Algorithm algorithm, std::uint64_t budget) {
  AlgoRun run;
  Placement placement;
  if (algorithm == Algorithm::exact) {
    try {
      placement = exact_optimal(instance, budget).placement;
    } catch (const Error& e) {
      if (e.kind() == Error::Kind::budget) return run;
      throw;
    }
  } else {
    placement = place(instance, algorithm);
  }
  run.report = evaluate(instance, placement);
  run.ok = true;
  return run;
}

double mean_of(const std::vector<double>& values) {
  double sum = 0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

// Sample standard deviation (n - 1 denominator).
double stddev_of(const std::vector<double>& values) {
  if (values.size() < 2) return 0.0;
  const double mean = mean_of(values);
  double ss = 0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

}  // namespace

std::string run_capacity_sweep(const ExperimentConfig& config) {
  check_config(config);
  if (config.capacities.empty()) {
    throw Error(Error::Kind::invalid_argument, "capacity sweep needs at least one capacity");
  }
  const std::vector<std::uint64_t> seeds = effective_seeds(config);

  std::vector<Instance> instances;
  instances.reserve(seeds.size());
  for (std::uint64_t seed : seeds) instances.push_back(make_instance(config, seed));

  std::string out = manifest("sweep", config);
  out += "# avg_utility = utility / users\n";
  out += "capacity seed algorithm utility avg_utility total_cost cost_constant status\n";
  for (int capacity : config.capacities) {
    for (std::size_t s = 0; s < seeds.size(); ++s) {
      const Instance instance = with_uniform_capacity(instances[s], capacity);
      for (Algorithm algorithm : config.algorithms) {
        out += std::to_string(capacity) + " " + std::to_string(seeds[s]) + " ";
        out += algorithm_name(algorithm);
        const AlgoRun run = run_algorithm(instance, algorithm, config.budget);
        if (!run.ok) {
          out += " - - - - budget_exceeded\n";
          continue;
        }
        const double users = static_cast<double>(std::max<std::size_t>(1, instance.num_users));
        out += " " + format_double(run.report.utility);
        out += " " + format_double(run.report.utility / users);
        out += " " + format_double(run.report.total_cost);
        out += " " + format_double(run.report.cost_constant);
        out += " ok\n";
      }
    }
  }
  return out;
}

std::string run_time_series(const ExperimentConfig& config, int capacity) {
  check_config(config);
  if (capacity < 0) {
    throw Error(Error::Kind::invalid_argument, "negative capacity");
  }
  const std::uint64_t seed = effective_seeds(config).front();
  const Instance instance =
      with_uniform_capacity(make_instance(config, seed), capacity);

  std::string out = manifest("timeseries", config);
  out += "# capacity " + std::to_string(capacity) + "\n";
  out += "# seed " + std::to_string(seed) + "\n";

  std::vector<EvaluationReport> reports;
  reports.reserve(config.algorithms.size());
  std::string header = "slot";
  for (Algorithm algorithm : config.algorithms) {
    // Budget failures abort here: a time series with a missing column is not
    // worth emitting.
    const AlgoRun run = run_algorithm(instance, algorithm, config.budget);
    if (!run.ok) {
      throw Error(Error::Kind::budget,
                  "exact solver exceeded its budget; raise --budget or drop 'exact'");
    }
    reports.push_back(run.report);
    header += " ";
    header += algorithm_name(algorithm);
  }
  out += "# cost_constant " + format_double(reports.front().cost_constant) + "\n";
  out += header + "\n";

  std::vector<double> running(config.algorithms.size(), 0.0);
  for (std::size_t t = 0; t < instance.num_slots(); ++t) {
    out += std::to_string(t + 1);  // slots are 1-based in reports
    for (std::size_t a = 0; a < reports.size(); ++a) {
      running[a] += reports[a].per_slot_utility[t];
      out += " " + format_double(running[a]);
    }
    out += "\n";
  }
  return out;
}

std::string run_ratio_study(const ExperimentConfig& config) {
  ExperimentConfig ratio_config = config;
  // The study is defined by greedy vs. optimal; the algorithm list is fixed.
  ratio_config.algorithms = {Algorithm::mobicacher, Algorithm::exact};
  check_config(ratio_config);
  const std::vector<std::uint64_t> seeds = effective_seeds(ratio_config);

  std::string out = manifest("ratio", ratio_config);
  if (!config.capacities.empty()) {
    out += "# capacity " + std::to_string(config.capacities.front()) + "\n";
  }
  out += "seed greedy_utility optimal_utility max_degree ratio status\n";

  std::size_t skipped = 0;
  std::size_t violations = 0;
  double max_ratio = 0;
  std::uint64_t worst_seed = 0;
  bool have_ratio = false;
  std::vector<std::uint64_t> histogram;  // 0.1-wide bins starting at ratio 1.0

  for (std::uint64_t seed : seeds) {
    Instance instance = make_instance(ratio_config, seed);
    if (!config.capacities.empty()) {
      instance = with_uniform_capacity(instance, config.capacities.front());
    }
    out += std::to_string(seed);
    ApproximationReport report;
    try {
      report = approximation_report(instance, config.budget);
    } catch (const Error& e) {
      if (e.kind() == Error::Kind::budget) {
        ++skipped;
        out += " - - - - budget_exceeded\n";
        continue;
      }
      if (e.kind() == Error::Kind::internal) {
        // Bound violation: report it in the table rather than aborting the
        // study, and fail loudly in the summary.
        ++violations;
        out += " - - - - bound_violated\n";
        continue;
      }
      throw;
    }
    if (!have_ratio || report.ratio > max_ratio) {
      max_ratio = report.ratio;
      worst_seed = seed;
      have_ratio = true;
    }
    const auto bin = static_cast<std::size_t>((report.ratio - 1.0) / 0.1);
    if (histogram.size() < bin + 1) histogram.resize(bin + 1, 0);
    ++histogram[bin];
    out += " " + format_double(report.greedy_utility);
    out += " " + format_double(report.optimal_utility);
    out += " " + std::to_string(report.max_degree);
    out += " " + format_double(report.ratio);
    out += " ok\n";
  }

  out += "# instances " + std::to_string(seeds.size()) + "\n";
  out += "# skipped " + std::to_string(skipped) + "\n";
  out += "# violations " + std::to_string(violations) + "\n";
  if (have_ratio) {
    out += "# max_ratio " + format_double(max_ratio) + "\n";
    out += "# worst_seed " + std::to_string(worst_seed) + "\n";
    for (std::size_t b = 0; b < histogram.size(); ++b) {
      if (histogram[b] == 0) continue;
      out += "# hist " + format_double(1.0 + 0.1 * static_cast<double>(b)) + " " +
             format_double(1.0 + 0.1 * static_cast<double>(b + 1)) + " " +
             std::to_string(histogram[b]) + "\n";
    }
  }
  return out;
}

std::string run_comparison(const ExperimentConfig& config) {
  check_config(config);
  if (config.algorithms.size() < 2) {
    throw Error(Error::Kind::invalid_argument, "comparison needs at least two algorithms");
  }
  if (effective_seeds(config).size() < 10) {
    throw Error(Error::Kind::invalid_argument, "comparison needs at least 10 seeds");
  }
  if (config.capacities.empty()) {
    throw Error(Error::Kind::invalid_argument, "comparison needs at least one capacity");
  }
  const std::vector<std::uint64_t> seeds = effective_seeds(config);

  std::vector<Instance> instances;
  instances.reserve(seeds.size());
  for (std::uint64_t seed : seeds) instances.push_back(make_instance(config, seed));

  std::string out = manifest("compare", config);
  std::string header = "capacity seed cost_constant";
  for (Algorithm algorithm : config.algorithms) {
    header += " " + std::string(algorithm_name(algorithm)) + "_utility";
    header += " " + std::string(algorithm_name(algorithm)) + "_cost";
  }
  out += header + "\n";

  std::string summary;
  for (int capacity : config.capacities) {
    // utilities[a][s] = utility of algorithm a on seed s
    std::vector<std::vector<double>> utilities(config.algorithms.size());
    for (std::size_t s = 0; s < seeds.size(); ++s) {
      const Instance instance = with_uniform_capacity(instances[s], capacity);
      out += std::to_string(capacity) + " " + std::to_string(seeds[s]);
      bool first = true;
      for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
        const AlgoRun run = run_algorithm(instance, config.algorithms[a], config.budget);
        if (!run.ok) {
          throw Error(Error::Kind::budget,
                      "exact solver exceeded its budget; raise --budget or drop 'exact'");
        }
        if (first) {
          out += " " + format_double(run.report.cost_constant);
          first = false;
        }
        utilities[a].push_back(run.report.utility);
        out += " " + format_double(run.report.utility);
        out += " " + format_double(run.report.total_cost);
      }
      out += "\n";
    }
    const std::string cap = std::to_string(capacity);
    for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
      summary += "# cap " + cap + " algo " + std::string(algorithm_name(config.algorithms[a])) +
                 " mean " + format_double(mean_of(utilities[a])) + " stddev " +
                 format_double(stddev_of(utilities[a])) + "\n";
    }
    for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
      for (std::size_t b = a + 1; b < config.algorithms.size(); ++b) {
        std::vector<double> diffs(seeds.size());
        for (std::size_t s = 0; s < seeds.size(); ++s) {
          diffs[s] = utilities[a][s] - utilities[b][s];
        }
        summary += "# cap " + cap + " pair " +
                   std::string(algorithm_name(config.algorithms[a])) + "-" +
                   std::string(algorithm_name(config.algorithms[b])) + " mean_diff " +
                   format_double(mean_of(diffs)) + " stddev_diff " +
                   format_double(stddev_of(diffs)) + "\n";
      }
    }
  }
  out += summary;
  return out;
}

}  // namespace mobicache
