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

#include "mobicache.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

#include "experiment.hpp"
#include "metrics.hpp"
#include "placement.hpp"
#include "text_format.hpp"
#include "traces.hpp"
#include "version.hpp"

struct mc_instance {
  mobicache::Instance value;
};

struct mc_placement {
  mobicache::Placement value;
};

struct mc_report {
  mobicache::EvaluationReport value;
};

struct mc_experiment {
  mobicache::ExperimentConfig value;
};

namespace {

thread_local std::string g_last_error;

mc_status map_kind(mobicache::Error::Kind kind) {
  using Kind = mobicache::Error::Kind;
  switch (kind) {
    case Kind::invalid_argument: return MC_ERR_INVALID_ARG;
    case Kind::parse: return MC_ERR_PARSE;
    case Kind::validation: return MC_ERR_VALIDATION;
    case Kind::io: return MC_ERR_IO;
    case Kind::budget: return MC_ERR_BUDGET;
    case Kind::internal: return MC_ERR_INTERNAL;
  }
  return MC_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes + mc_last_error().
template <typename Fn>
mc_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return MC_OK;
  } catch (const mobicache::Error& e) {
    g_last_error = e.what();
    return map_kind(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MC_ERR_INTERNAL;
  }
}

mc_status invalid(const char* message) {
  g_last_error = message;
  return MC_ERR_INVALID_ARG;
}

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) return nullptr;
  std::memcpy(out, text.data(), text.size() + 1);
  return out;
}

mobicache::SyntheticConfig to_synth(const mc_synth_config& config) {
  mobicache::SyntheticConfig synth;
  synth.stations = config.stations;
  synth.users = config.users;
  synth.contents = config.contents;
  synth.slots = config.slots;
  synth.grid_width = config.grid_width;
  synth.grid_height = config.grid_height;
  synth.stations_per_cell = config.stations_per_cell;
  synth.stay_probability = config.stay_probability;
  synth.zipf_exponent = config.zipf_exponent;
  synth.preference_noise = config.preference_noise;
  synth.seed = config.seed;
  return synth;
}

}  // namespace

extern "C" {

const char* mc_version(void) { return mobicache::kVersion; }

const char* mc_status_name(mc_status status) {
  switch (status) {
    case MC_OK: return "ok";
    case MC_ERR_INVALID_ARG: return "invalid_argument";
    case MC_ERR_PARSE: return "parse_error";
    case MC_ERR_VALIDATION: return "validation_error";
    case MC_ERR_IO: return "io_error";
    case MC_ERR_BUDGET: return "budget_exceeded";
    case MC_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* mc_last_error(void) { return g_last_error.c_str(); }

void mc_string_free(char* text) { std::free(text); }

mc_status mc_instance_parse(const char* text, mc_instance** out) {
  if (text == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] { *out = new mc_instance{mobicache::parse_instance(text)}; });
}

mc_status mc_instance_load(const char* path, mc_instance** out) {
  if (path == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] { *out = new mc_instance{mobicache::load_instance(path)}; });
}

mc_status mc_instance_save(const mc_instance* instance, const char* path) {
  if (instance == nullptr || path == nullptr) return invalid("null argument");
  return guarded([&] { mobicache::save_instance(instance->value, path); });
}

char* mc_instance_to_text(const mc_instance* instance) {
  if (instance == nullptr) return nullptr;
  return dup_string(mobicache::serialize_instance(instance->value));
}

void mc_instance_free(mc_instance* instance) { delete instance; }

int32_t mc_instance_stations(const mc_instance* instance) {
  return instance == nullptr ? -1 : static_cast<int32_t>(instance->value.num_stations());
}

int32_t mc_instance_users(const mc_instance* instance) {
  return instance == nullptr ? -1 : static_cast<int32_t>(instance->value.num_users);
}

int32_t mc_instance_contents(const mc_instance* instance) {
  return instance == nullptr ? -1 : static_cast<int32_t>(instance->value.library_size);
}

int32_t mc_instance_slots(const mc_instance* instance) {
  return instance == nullptr ? -1 : static_cast<int32_t>(instance->value.num_slots());
}

double mc_instance_slot_seconds(const mc_instance* instance) {
  return instance == nullptr ? 0.0 : instance->value.trace.slot_seconds;
}

int32_t mc_instance_capacity(const mc_instance* instance, int32_t station) {
  if (instance == nullptr || station < 0 ||
      static_cast<std::size_t>(station) >= instance->value.num_stations()) {
    return -1;
  }
  return instance->value.capacities[static_cast<std::size_t>(station)];
}

double mc_instance_cost(const mc_instance* instance, int32_t user, int32_t content) {
  if (instance == nullptr || user < 0 || content < 0 ||
      static_cast<std::size_t>(user) >= instance->value.num_users ||
      static_cast<std::size_t>(content) >= instance->value.library_size) {
    return -1.0;
  }
  return instance->value.costs.at(static_cast<std::size_t>(user),
                                  static_cast<std::size_t>(content));
}

mc_status mc_instance_with_uniform_capacity(const mc_instance* instance, int32_t capacity,
                                            mc_instance** out) {
  if (instance == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    *out = new mc_instance{mobicache::with_uniform_capacity(instance->value, capacity)};
  });
}

int32_t mc_max_degree(const mc_instance* instance) {
  return instance == nullptr ? -1 : mobicache::max_degree(instance->value);
}

void mc_synth_config_init(mc_synth_config* config) {
  if (config == nullptr) return;
  const mobicache::SyntheticConfig defaults;
  config->stations = defaults.stations;
  config->users = defaults.users;
  config->contents = defaults.contents;
  config->slots = defaults.slots;
  config->grid_width = defaults.grid_width;
  config->grid_height = defaults.grid_height;
  config->stations_per_cell = defaults.stations_per_cell;
  config->stay_probability = defaults.stay_probability;
  config->zipf_exponent = defaults.zipf_exponent;
  config->preference_noise = defaults.preference_noise;
  config->seed = defaults.seed;
}

mc_status mc_generate(const mc_synth_config* config, mc_instance** out) {
  if (config == nullptr || out == nullptr) return invalid("null argument");
  return guarded(
      [&] { *out = new mc_instance{mobicache::generate_synthetic(to_synth(*config))}; });
}

void mc_ingest_options_init(mc_ingest_options* options) {
  if (options == nullptr) return;
  options->mobility_path = nullptr;
  options->listening_path = nullptr;
  options->slot_seconds = 20.0;
  options->has_window = 0;
  options->window_start = 0.0;
  options->window_end = 0.0;
  options->top_n = 200;
  options->capacity = 0;
  options->profile_seed = 0;
}

mc_status mc_ingest(const mc_ingest_options* options, mc_instance** out,
                    mc_ingest_stats* stats) {
  if (options == nullptr || out == nullptr || options->mobility_path == nullptr ||
      options->listening_path == nullptr) {
    return invalid("null argument");
  }
  return guarded([&] {
    const mobicache::RawMobilityLog mobility =
        mobicache::parse_mobility_log(mobicache::read_file(options->mobility_path));
    const mobicache::ListeningLog listening =
        mobicache::parse_listening_log(mobicache::read_file(options->listening_path));
    mobicache::IngestOptions opts;
    opts.slot_seconds = options->slot_seconds;
    if (options->has_window != 0) {
      opts.window_start = options->window_start;
      opts.window_end = options->window_end;
    }
    if (options->top_n < 1) {
      throw mobicache::Error(mobicache::Error::Kind::invalid_argument, "top_n must be >= 1");
    }
    opts.top_n = static_cast<std::size_t>(options->top_n);
    opts.capacity = options->capacity;
    opts.profile_seed = options->profile_seed;
    mobicache::IngestResult result = mobicache::ingest_logs(mobility, listening, opts);
    if (stats != nullptr) {
      stats->mobility_records = result.mobility_records;
      stats->samples_dropped = result.samples_dropped;
      stats->listening_records = result.listening_records;
    }
    *out = new mc_instance{std::move(result.instance)};
  });
}

mc_status mc_place(const mc_instance* instance, mc_algorithm algorithm, mc_placement** out) {
  if (instance == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    mobicache::Algorithm algo;
    switch (algorithm) {
      case MC_ALG_MOBICACHER: algo = mobicache::Algorithm::mobicacher; break;
      case MC_ALG_FEMTOCACHER: algo = mobicache::Algorithm::femtocacher; break;
      case MC_ALG_POPULARITY: algo = mobicache::Algorithm::popularity; break;
      default:
        throw mobicache::Error(mobicache::Error::Kind::invalid_argument,
                               "unknown algorithm id " + std::to_string(algorithm));
    }
    *out = new mc_placement{mobicache::place(instance->value, algo)};
  });
}

mc_status mc_place_exact(const mc_instance* instance, uint64_t budget, mc_placement** out,
                         double* utility_out) {
  if (instance == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    if (budget == 0) budget = mobicache::kDefaultEnumerationBudget;
    mobicache::ExactResult result = mobicache::exact_optimal(instance->value, budget);
    if (utility_out != nullptr) *utility_out = result.utility;
    *out = new mc_placement{std::move(result.placement)};
  });
}

mc_status mc_placement_parse(const mc_instance* instance, const char* text,
                             mc_placement** out) {
  if (instance == nullptr || text == nullptr || out == nullptr) return invalid("null argument");
  return guarded(
      [&] { *out = new mc_placement{mobicache::parse_placement(text, instance->value)}; });
}

mc_status mc_placement_load(const mc_instance* instance, const char* path,
                            mc_placement** out) {
  if (instance == nullptr || path == nullptr || out == nullptr) return invalid("null argument");
  return guarded(
      [&] { *out = new mc_placement{mobicache::load_placement(path, instance->value)}; });
}

mc_status mc_placement_save(const mc_placement* placement, const char* path) {
  if (placement == nullptr || path == nullptr) return invalid("null argument");
  return guarded([&] { mobicache::save_placement(placement->value, path); });
}

char* mc_placement_to_text(const mc_placement* placement) {
  if (placement == nullptr) return nullptr;
  return dup_string(mobicache::serialize_placement(placement->value));
}

void mc_placement_free(mc_placement* placement) { delete placement; }

int32_t mc_placement_cache_size(const mc_placement* placement, int32_t station) {
  if (placement == nullptr || station < 0 ||
      static_cast<std::size_t>(station) >= placement->value.cached.size()) {
    return -1;
  }
  return static_cast<int32_t>(placement->value.cached[static_cast<std::size_t>(station)].size());
}

int32_t mc_placement_cached_content(const mc_placement* placement, int32_t station,
                                    int32_t index) {
  if (placement == nullptr || station < 0 ||
      static_cast<std::size_t>(station) >= placement->value.cached.size()) {
    return -1;
  }
  const auto& cached = placement->value.cached[static_cast<std::size_t>(station)];
  if (index < 0 || static_cast<std::size_t>(index) >= cached.size()) return -1;
  return cached[static_cast<std::size_t>(index)];
}

int32_t mc_placement_contains(const mc_placement* placement, int32_t station,
                              int32_t content) {
  if (placement == nullptr || station < 0 ||
      static_cast<std::size_t>(station) >= placement->value.cached.size()) {
    return 0;
  }
  const auto& cached = placement->value.cached[static_cast<std::size_t>(station)];
  return std::binary_search(cached.begin(), cached.end(), content) ? 1 : 0;
}

mc_status mc_placement_validate(const mc_instance* instance, const mc_placement* placement) {
  if (instance == nullptr || placement == nullptr) return invalid("null argument");
  return guarded(
      [&] { mobicache::validate_placement(instance->value, placement->value); });
}

mc_status mc_evaluate(const mc_instance* instance, const mc_placement* placement,
                      mc_report** out) {
  if (instance == nullptr || placement == nullptr || out == nullptr) {
    return invalid("null argument");
  }
  return guarded([&] {
    mobicache::Placement checked =
        mobicache::validate_placement(instance->value, placement->value);
    *out = new mc_report{mobicache::evaluate(instance->value, checked)};
  });
}

void mc_report_free(mc_report* report) { delete report; }

double mc_report_utility(const mc_report* report) {
  return report == nullptr ? 0.0 : report->value.utility;
}

double mc_report_total_cost(const mc_report* report) {
  return report == nullptr ? 0.0 : report->value.total_cost;
}

double mc_report_cost_constant(const mc_report* report) {
  return report == nullptr ? 0.0 : report->value.cost_constant;
}

int32_t mc_report_slots(const mc_report* report) {
  return report == nullptr ? 0 : static_cast<int32_t>(report->value.per_slot_utility.size());
}

double mc_report_slot_utility(const mc_report* report, int32_t slot) {
  if (report == nullptr || slot < 0 ||
      static_cast<std::size_t>(slot) >= report->value.per_slot_utility.size()) {
    return 0.0;
  }
  return report->value.per_slot_utility[static_cast<std::size_t>(slot)];
}

double mc_report_slot_cost(const mc_report* report, int32_t slot) {
  if (report == nullptr || slot < 0 ||
      static_cast<std::size_t>(slot) >= report->value.per_slot_cost.size()) {
    return 0.0;
  }
  return report->value.per_slot_cost[static_cast<std::size_t>(slot)];
}

int32_t mc_report_max_degree(const mc_report* report) {
  return report == nullptr ? 1 : report->value.max_degree;
}

uint64_t mc_report_hits(const mc_report* report) {
  return report == nullptr ? 0 : report->value.hits;
}

uint64_t mc_report_misses(const mc_report* report) {
  return report == nullptr ? 0 : report->value.misses;
}

char* mc_report_to_text(const mc_report* report) {
  if (report == nullptr) return nullptr;
  const mobicache::EvaluationReport& r = report->value;
  std::string out;
  out += "utility " + mobicache::format_double(r.utility) + "\n";
  out += "total_cost " + mobicache::format_double(r.total_cost) + "\n";
  out += "cost_constant " + mobicache::format_double(r.cost_constant) + "\n";
  out += "max_degree " + std::to_string(r.max_degree) + "\n";
  out += "hits " + std::to_string(r.hits) + "\n";
  out += "misses " + std::to_string(r.misses) + "\n";
  out += "slots " + std::to_string(r.per_slot_utility.size()) + "\n";
  for (std::size_t t = 0; t < r.per_slot_utility.size(); ++t) {
    out += "slot " + std::to_string(t + 1) + " utility " +
           mobicache::format_double(r.per_slot_utility[t]) + " cost " +
           mobicache::format_double(r.per_slot_cost[t]) + "\n";
  }
  return dup_string(out);
}

mc_status mc_approximation_report(const mc_instance* instance, uint64_t budget,
                                  mc_approx_report* out) {
  if (instance == nullptr || out == nullptr) return invalid("null argument");
  return guarded([&] {
    if (budget == 0) budget = mobicache::kDefaultEnumerationBudget;
    const mobicache::ApproximationReport report =
        mobicache::approximation_report(instance->value, budget);
    out->greedy_utility = report.greedy_utility;
    out->optimal_utility = report.optimal_utility;
    out->max_degree = report.max_degree;
    out->ratio = report.ratio;
  });
}

mc_status mc_sojourn_cdf(const mc_instance* instance, mc_cdf_point** points_out,
                         int32_t* count_out) {
  if (instance == nullptr || points_out == nullptr || count_out == nullptr) {
    return invalid("null argument");
  }
  return guarded([&] {
    const std::vector<mobicache::CdfPoint> cdf = mobicache::sojourn_cdf(instance->value);
    auto* points = static_cast<mc_cdf_point*>(std::malloc(sizeof(mc_cdf_point) *
                                                          std::max<std::size_t>(1, cdf.size())));
    if (points == nullptr) {
      throw mobicache::Error(mobicache::Error::Kind::internal, "out of memory");
    }
    for (std::size_t k = 0; k < cdf.size(); ++k) {
      points[k].length = cdf[k].length;
      points[k].fraction = cdf[k].fraction;
    }
    *points_out = points;
    *count_out = static_cast<int32_t>(cdf.size());
  });
}

void mc_cdf_free(mc_cdf_point* points) { std::free(points); }

mc_experiment* mc_experiment_new(void) { return new mc_experiment{}; }

void mc_experiment_free(mc_experiment* experiment) { delete experiment; }

mc_status mc_experiment_set_instance_file(mc_experiment* experiment, const char* path) {
  if (experiment == nullptr || path == nullptr) return invalid("null argument");
  experiment->value.instance_path = path;
  experiment->value.synthetic.reset();
  return MC_OK;
}

mc_status mc_experiment_set_synthetic(mc_experiment* experiment,
                                      const mc_synth_config* config) {
  if (experiment == nullptr || config == nullptr) return invalid("null argument");
  experiment->value.synthetic = to_synth(*config);
  experiment->value.instance_path.reset();
  return MC_OK;
}

mc_status mc_experiment_set_seeds(mc_experiment* experiment, const uint64_t* seeds,
                                  int32_t count) {
  if (experiment == nullptr || seeds == nullptr || count < 1) return invalid("null argument");
  experiment->value.seeds.assign(seeds, seeds + count);
  return MC_OK;
}

mc_status mc_experiment_set_capacities(mc_experiment* experiment, const int32_t* capacities,
                                       int32_t count) {
  if (experiment == nullptr || capacities == nullptr || count < 1) {
    return invalid("null argument");
  }
  experiment->value.capacities.assign(capacities, capacities + count);
  return MC_OK;
}

mc_status mc_experiment_set_algorithms(mc_experiment* experiment, const char* csv) {
  if (experiment == nullptr || csv == nullptr) return invalid("null argument");
  return guarded(
      [&] { experiment->value.algorithms = mobicache::parse_algorithm_list(csv); });
}

mc_status mc_experiment_set_budget(mc_experiment* experiment, uint64_t budget) {
  if (experiment == nullptr || budget == 0) return invalid("budget must be >= 1");
  experiment->value.budget = budget;
  return MC_OK;
}

mc_status mc_run_sweep(const mc_experiment* experiment, char** text_out) {
  if (experiment == nullptr || text_out == nullptr) return invalid("null argument");
  return guarded(
      [&] { *text_out = dup_string(mobicache::run_capacity_sweep(experiment->value)); });
}

mc_status mc_run_timeseries(const mc_experiment* experiment, int32_t capacity,
                            char** text_out) {
  if (experiment == nullptr || text_out == nullptr) return invalid("null argument");
  return guarded([&] {
    *text_out = dup_string(mobicache::run_time_series(experiment->value, capacity));
  });
}

mc_status mc_run_ratio(const mc_experiment* experiment, char** text_out) {
  if (experiment == nullptr || text_out == nullptr) return invalid("null argument");
  return guarded(
      [&] { *text_out = dup_string(mobicache::run_ratio_study(experiment->value)); });
}

mc_status mc_run_compare(const mc_experiment* experiment, char** text_out) {
  if (experiment == nullptr || text_out == nullptr) return invalid("null argument");
  return guarded(
      [&] { *text_out = dup_string(mobicache::run_comparison(experiment->value)); });
}

}  // extern "C"
