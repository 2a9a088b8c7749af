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

// Command-line interface. Everything goes through the public C API in
// mobicache.h; this file owns only argument parsing and file output.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mobicache.h"

namespace {

int fail(const std::string& context) {
  std::cerr << "error: " << context << ": " << mc_last_error() << "\n";
  return 1;
}

// Empty path writes to stdout.
int write_output(const std::string& path, const char* text) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return 1;
  }
  out << text;
  if (!out) {
    std::cerr << "error: failed writing '" << path << "'\n";
    return 1;
  }
  return 0;
}

struct InstanceHandle {
  mc_instance* ptr = nullptr;
  ~InstanceHandle() { mc_instance_free(ptr); }
};

struct PlacementHandle {
  mc_placement* ptr = nullptr;
  ~PlacementHandle() { mc_placement_free(ptr); }
};

struct ExperimentHandle {
  mc_experiment* ptr = mc_experiment_new();
  ~ExperimentHandle() { mc_experiment_free(ptr); }
};

struct StringHandle {
  char* ptr = nullptr;
  ~StringHandle() { mc_string_free(ptr); }
};

// Instance source shared by the experiment verbs and `generate`.
struct SourceOptions {
  std::string instance_path;
  bool synthetic = false;
  mc_synth_config synth;
};

void add_synthetic_options(CLI::App* cmd, SourceOptions& source) {
  mc_synth_config_init(&source.synth);
  cmd->add_flag("--synthetic", source.synthetic, "generate seeded synthetic instances");
  cmd->add_option("--stations", source.synth.stations, "synthetic: number of stations")
      ->capture_default_str();
  cmd->add_option("--users", source.synth.users, "synthetic: number of users")
      ->capture_default_str();
  cmd->add_option("--contents", source.synth.contents, "synthetic: library size")
      ->capture_default_str();
  cmd->add_option("--slots", source.synth.slots, "synthetic: time slots")
      ->capture_default_str();
  cmd->add_option("--grid-width", source.synth.grid_width, "synthetic: cell grid width")
      ->capture_default_str();
  cmd->add_option("--grid-height", source.synth.grid_height, "synthetic: cell grid height")
      ->capture_default_str();
  cmd->add_option("--stations-per-cell", source.synth.stations_per_cell,
                  "synthetic: stations reachable per cell (>1 overlaps)")
      ->capture_default_str();
  cmd->add_option("--stay-prob", source.synth.stay_probability,
                  "synthetic: per-slot probability of not moving")
      ->capture_default_str();
  cmd->add_option("--zipf", source.synth.zipf_exponent, "synthetic: Zipf exponent")
      ->capture_default_str();
  cmd->add_option("--noise", source.synth.preference_noise,
                  "synthetic: fraction of contents rank-shuffled per user")
      ->capture_default_str();
}

int configure_source(const SourceOptions& source, mc_experiment* experiment) {
  if (!source.instance_path.empty() && source.synthetic) {
    std::cerr << "error: --instance and --synthetic are mutually exclusive\n";
    return 1;
  }
  if (!source.instance_path.empty()) {
    if (mc_experiment_set_instance_file(experiment, source.instance_path.c_str()) != MC_OK) {
      return fail("setting instance file");
    }
    return 0;
  }
  if (source.synthetic) {
    if (mc_experiment_set_synthetic(experiment, &source.synth) != MC_OK) {
      return fail("setting synthetic source");
    }
    return 0;
  }
  std::cerr << "error: pick an instance source: --instance <file> or --synthetic\n";
  return 1;
}

int configure_experiment(const SourceOptions& source, const std::vector<std::uint64_t>& seeds,
                         const std::vector<int32_t>& capacities, const std::string& algorithms,
                         std::uint64_t budget, mc_experiment* experiment) {
  if (const int rc = configure_source(source, experiment); rc != 0) return rc;
  if (!seeds.empty() &&
      mc_experiment_set_seeds(experiment, seeds.data(), static_cast<int32_t>(seeds.size())) !=
          MC_OK) {
    return fail("setting seeds");
  }
  if (!capacities.empty() &&
      mc_experiment_set_capacities(experiment, capacities.data(),
                                   static_cast<int32_t>(capacities.size())) != MC_OK) {
    return fail("setting capacities");
  }
  if (mc_experiment_set_algorithms(experiment, algorithms.c_str()) != MC_OK) {
    return fail("setting algorithms");
  }
  if (mc_experiment_set_budget(experiment, budget) != MC_OK) {
    return fail("setting budget");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mobility-aware content-cache placement for small-cell networks"};
  app.require_subcommand(1);
  // Options live in a [subcommand] section; --config goes before the verb.
  app.set_config("--config", "", "read options from an INI/TOML config file");
  app.set_version_flag("--version", std::string("mobicache ") + mc_version());

  std::string out_path;
  std::uint64_t budget = 10'000'000;
  std::vector<std::uint64_t> seeds{0};
  std::vector<int32_t> capacities;
  std::string algorithms = "mobicacher,femtocacher,popularity";

  // --- validate ---------------------------------------------------------
  auto* validate = app.add_subcommand("validate", "check an instance file");
  validate->configurable();
  std::string validate_path;
  validate->add_option("--instance", validate_path, "instance file")->required();
  validate->callback([&] {
    InstanceHandle inst;
    if (mc_instance_load(validate_path.c_str(), &inst.ptr) != MC_OK) {
      exit(fail("validating '" + validate_path + "'"));
    }
    std::cout << "valid instance: " << mc_instance_stations(inst.ptr) << " stations, "
              << mc_instance_users(inst.ptr) << " users, " << mc_instance_contents(inst.ptr)
              << " contents, " << mc_instance_slots(inst.ptr) << " slots, max degree "
              << mc_max_degree(inst.ptr) << "\n";
  });

  // --- place ------------------------------------------------------------
  auto* place = app.add_subcommand("place", "compute a cache placement");
  place->configurable();
  std::string place_instance;
  std::string place_algorithm = "mobicacher";
  place->add_option("--instance", place_instance, "instance file")->required();
  place->add_option("--algorithm", place_algorithm,
                    "mobicacher | femtocacher | popularity | exact")
      ->capture_default_str();
  place->add_option("--budget", budget, "exact solver enumeration budget")
      ->capture_default_str();
  place->add_option("--out", out_path, "placement output file (default stdout)");
  place->callback([&] {
    InstanceHandle inst;
    if (mc_instance_load(place_instance.c_str(), &inst.ptr) != MC_OK) {
      exit(fail("loading '" + place_instance + "'"));
    }
    PlacementHandle placement;
    if (place_algorithm == "exact") {
      double best = 0;
      if (mc_place_exact(inst.ptr, budget, &placement.ptr, &best) != MC_OK) {
        exit(fail("exact placement"));
      }
      std::cerr << "exact optimum utility: " << best << "\n";
    } else {
      mc_algorithm algo;
      if (place_algorithm == "mobicacher") {
        algo = MC_ALG_MOBICACHER;
      } else if (place_algorithm == "femtocacher") {
        algo = MC_ALG_FEMTOCACHER;
      } else if (place_algorithm == "popularity") {
        algo = MC_ALG_POPULARITY;
      } else {
        std::cerr << "error: unknown algorithm '" << place_algorithm << "'\n";
        exit(1);
      }
      if (mc_place(inst.ptr, algo, &placement.ptr) != MC_OK) exit(fail("placement"));
    }
    StringHandle text{mc_placement_to_text(placement.ptr)};
    exit(write_output(out_path, text.ptr));
  });

  // --- evaluate ---------------------------------------------------------
  auto* evaluate = app.add_subcommand("evaluate", "evaluate a placement against an instance");
  evaluate->configurable();
  std::string eval_instance;
  std::string eval_placement;
  evaluate->add_option("--instance", eval_instance, "instance file")->required();
  evaluate->add_option("--placement", eval_placement, "placement file")->required();
  evaluate->add_option("--out", out_path, "report output file (default stdout)");
  evaluate->callback([&] {
    InstanceHandle inst;
    if (mc_instance_load(eval_instance.c_str(), &inst.ptr) != MC_OK) {
      exit(fail("loading '" + eval_instance + "'"));
    }
    PlacementHandle placement;
    if (mc_placement_load(inst.ptr, eval_placement.c_str(), &placement.ptr) != MC_OK) {
      exit(fail("loading '" + eval_placement + "'"));
    }
    mc_report* report = nullptr;
    if (mc_evaluate(inst.ptr, placement.ptr, &report) != MC_OK) exit(fail("evaluating"));
    StringHandle text{mc_report_to_text(report)};
    mc_report_free(report);
    exit(write_output(out_path, text.ptr));
  });

  // --- generate ---------------------------------------------------------
  auto* generate = app.add_subcommand("generate", "write a synthetic instance file");
  generate->configurable();
  SourceOptions generate_source;
  add_synthetic_options(generate, generate_source);
  std::uint64_t generate_seed = 0;
  int32_t generate_capacity = 0;
  generate->add_option("--seed", generate_seed, "generator seed")->capture_default_str();
  generate->add_option("--capacity", generate_capacity, "uniform station capacity")
      ->capture_default_str();
  generate->add_option("--out", out_path, "instance output file (default stdout)");
  generate->callback([&] {
    generate_source.synth.seed = generate_seed;
    InstanceHandle raw;
    if (mc_generate(&generate_source.synth, &raw.ptr) != MC_OK) exit(fail("generating"));
    InstanceHandle sized;
    if (mc_instance_with_uniform_capacity(raw.ptr, generate_capacity, &sized.ptr) != MC_OK) {
      exit(fail("setting capacity"));
    }
    StringHandle text{mc_instance_to_text(sized.ptr)};
    exit(write_output(out_path, text.ptr));
  });

  // --- ingest -----------------------------------------------------------
  auto* ingest = app.add_subcommand("ingest", "build an instance from raw logs");
  ingest->configurable();
  std::string mobility_path;
  std::string listening_path;
  double slot_seconds = 20.0;
  double window_start = 0.0;
  double window_end = 0.0;
  int32_t top_n = 200;
  int32_t ingest_capacity = 0;
  std::uint64_t profile_seed = 0;
  ingest->add_option("--mobility", mobility_path, "mobility log (tsv)")->required();
  ingest->add_option("--listening", listening_path, "listening log (tsv)")->required();
  ingest->add_option("--slot-seconds", slot_seconds, "slot length in seconds")
      ->capture_default_str();
  auto* window_start_opt =
      ingest->add_option("--window-start", window_start, "window start timestamp");
  auto* window_end_opt = ingest->add_option("--window-end", window_end, "window end timestamp");
  ingest->add_option("--top-n", top_n, "library: top played contents")->capture_default_str();
  ingest->add_option("--capacity", ingest_capacity, "uniform station capacity")
      ->capture_default_str();
  ingest->add_option("--profile-seed", profile_seed, "profile assignment seed")
      ->capture_default_str();
  ingest->add_option("--out", out_path, "instance output file (default stdout)");
  ingest->callback([&] {
    mc_ingest_options options;
    mc_ingest_options_init(&options);
    options.mobility_path = mobility_path.c_str();
    options.listening_path = listening_path.c_str();
    options.slot_seconds = slot_seconds;
    if (window_start_opt->count() != window_end_opt->count()) {
      std::cerr << "error: --window-start and --window-end must be given together\n";
      exit(1);
    }
    if (window_start_opt->count() > 0) {
      options.has_window = 1;
      options.window_start = window_start;
      options.window_end = window_end;
    }
    options.top_n = top_n;
    options.capacity = ingest_capacity;
    options.profile_seed = profile_seed;

    InstanceHandle inst;
    mc_ingest_stats stats;
    if (mc_ingest(&options, &inst.ptr, &stats) != MC_OK) exit(fail("ingesting"));
    std::cerr << "ingest: " << stats.mobility_records << " mobility records ("
              << stats.samples_dropped << " outside the window), " << stats.listening_records
              << " listening records -> " << mc_instance_stations(inst.ptr) << " stations, "
              << mc_instance_users(inst.ptr) << " users, " << mc_instance_contents(inst.ptr)
              << " contents, " << mc_instance_slots(inst.ptr) << " slots\n";
    if (stats.mobility_records > 0 && stats.samples_dropped == stats.mobility_records) {
      std::cerr << "warning: every sample fell outside the window; the trace is empty\n";
    }
    StringHandle text{mc_instance_to_text(inst.ptr)};
    exit(write_output(out_path, text.ptr));
  });

  // --- experiment verbs --------------------------------------------------
  SourceOptions sweep_source;
  auto* sweep = app.add_subcommand("sweep", "utility across a capacity sweep");
  sweep->configurable();
  sweep->add_option("--instance", sweep_source.instance_path, "instance file to load");
  add_synthetic_options(sweep, sweep_source);
  sweep->add_option("--capacities", capacities, "capacities to sweep")
      ->required()
      ->delimiter(',');
  sweep->add_option("--algorithms", algorithms, "comma-separated algorithm list")
      ->capture_default_str();
  sweep->add_option("--seed", seeds, "seeds (synthetic sources)")->delimiter(',');
  sweep->add_option("--budget", budget, "exact solver enumeration budget")
      ->capture_default_str();
  sweep->add_option("--out", out_path, "results file (default stdout)");
  sweep->callback([&] {
    ExperimentHandle experiment;
    if (const int rc = configure_experiment(sweep_source, seeds, capacities, algorithms,
                                            budget, experiment.ptr);
        rc != 0) {
      exit(rc);
    }
    StringHandle text;
    if (mc_run_sweep(experiment.ptr, &text.ptr) != MC_OK) exit(fail("sweep"));
    exit(write_output(out_path, text.ptr));
  });

  SourceOptions series_source;
  auto* timeseries = app.add_subcommand("timeseries", "cumulative utility per slot");
  timeseries->configurable();
  timeseries->add_option("--instance", series_source.instance_path, "instance file to load");
  add_synthetic_options(timeseries, series_source);
  timeseries->add_option("--capacities", capacities, "single capacity")
      ->required()
      ->delimiter(',');
  timeseries->add_option("--algorithms", algorithms, "comma-separated algorithm list")
      ->capture_default_str();
  timeseries->add_option("--seed", seeds, "seeds (first one is used)")->delimiter(',');
  timeseries->add_option("--budget", budget, "exact solver enumeration budget")
      ->capture_default_str();
  timeseries->add_option("--out", out_path, "results file (default stdout)");
  timeseries->callback([&] {
    if (capacities.size() != 1) {
      std::cerr << "error: timeseries takes exactly one capacity\n";
      exit(1);
    }
    ExperimentHandle experiment;
    if (const int rc = configure_experiment(series_source, seeds, capacities, algorithms,
                                            budget, experiment.ptr);
        rc != 0) {
      exit(rc);
    }
    StringHandle text;
    if (mc_run_timeseries(experiment.ptr, capacities.front(), &text.ptr) != MC_OK) {
      exit(fail("timeseries"));
    }
    exit(write_output(out_path, text.ptr));
  });

  SourceOptions ratio_source;
  auto* ratio = app.add_subcommand("ratio", "greedy-vs-optimal approximation ratios");
  ratio->configurable();
  ratio->add_option("--instance", ratio_source.instance_path, "instance file to load");
  add_synthetic_options(ratio, ratio_source);
  ratio->add_option("--capacities", capacities, "uniform capacity (first one is used)")
      ->delimiter(',');
  ratio->add_option("--seed", seeds, "seeds, one instance each")->delimiter(',');
  ratio->add_option("--budget", budget, "exact solver enumeration budget")
      ->capture_default_str();
  ratio->add_option("--out", out_path, "results file (default stdout)");
  ratio->callback([&] {
    ExperimentHandle experiment;
    // the ratio study fixes its own algorithm pair
    if (const int rc = configure_experiment(ratio_source, seeds, capacities, "mobicacher",
                                            budget, experiment.ptr);
        rc != 0) {
      exit(rc);
    }
    StringHandle text;
    if (mc_run_ratio(experiment.ptr, &text.ptr) != MC_OK) exit(fail("ratio study"));
    exit(write_output(out_path, text.ptr));
  });

  SourceOptions compare_source;
  auto* compare = app.add_subcommand("compare", "statistical comparison across seeds");
  compare->configurable();
  compare->add_option("--instance", compare_source.instance_path, "instance file to load");
  add_synthetic_options(compare, compare_source);
  compare->add_option("--capacities", capacities, "capacities to compare at")
      ->required()
      ->delimiter(',');
  compare->add_option("--algorithms", algorithms, "comma-separated algorithm list (>= 2)")
      ->capture_default_str();
  compare->add_option("--seed", seeds, "seeds (>= 10)")->delimiter(',');
  compare->add_option("--budget", budget, "exact solver enumeration budget")
      ->capture_default_str();
  compare->add_option("--out", out_path, "results file (default stdout)");
  compare->callback([&] {
    ExperimentHandle experiment;
    if (const int rc = configure_experiment(compare_source, seeds, capacities, algorithms,
                                            budget, experiment.ptr);
        rc != 0) {
      exit(rc);
    }
    StringHandle text;
    if (mc_run_compare(experiment.ptr, &text.ptr) != MC_OK) exit(fail("comparison"));
    exit(write_output(out_path, text.ptr));
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}
