/* Copyright 2026 The Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* mobicache: mobility-aware content-cache placement for small-cell networks.
 *
 * C API over the shared library. Objects are opaque handles created and
 * destroyed by the library; every fallible call returns an mc_status and
 * leaves a human-readable message in mc_last_error() (thread-local) on
 * failure. Strings returned as char* are heap-allocated; release them with
 * mc_string_free().
 */

#ifndef MOBICACHE_H
#define MOBICACHE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mc_status {
  MC_OK = 0,
  MC_ERR_INVALID_ARG = 1, /* bad parameter or config */
  MC_ERR_PARSE = 2,       /* malformed input text */
  MC_ERR_VALIDATION = 3,  /* structurally broken instance or placement */
  MC_ERR_IO = 4,          /* file could not be read or written */
  MC_ERR_BUDGET = 5,      /* exhaustive search space exceeds the budget */
  MC_ERR_INTERNAL = 6
} mc_status;

const char* mc_version(void);
const char* mc_status_name(mc_status status);
/* Message of the most recent failure on this thread; empty string if none. */
const char* mc_last_error(void);
void mc_string_free(char* text);

/* ---------------------------------------------------------------------------
 * Instances
 *
 * A problem instance: stations with capacities, users, a content library,
 * the per-(user, content) normalized cost matrix and the slotted
 * reachability trace. The text format is documented in the project README.
 */

typedef struct mc_instance mc_instance;

mc_status mc_instance_parse(const char* text, mc_instance** out);
mc_status mc_instance_load(const char* path, mc_instance** out);
mc_status mc_instance_save(const mc_instance* instance, const char* path);
char* mc_instance_to_text(const mc_instance* instance);
void mc_instance_free(mc_instance* instance);

int32_t mc_instance_stations(const mc_instance* instance);
int32_t mc_instance_users(const mc_instance* instance);
int32_t mc_instance_contents(const mc_instance* instance);
int32_t mc_instance_slots(const mc_instance* instance);
double mc_instance_slot_seconds(const mc_instance* instance);
int32_t mc_instance_capacity(const mc_instance* instance, int32_t station);
double mc_instance_cost(const mc_instance* instance, int32_t user, int32_t content);

/* Copy with every station capacity replaced. */
mc_status mc_instance_with_uniform_capacity(const mc_instance* instance, int32_t capacity,
                                            mc_instance** out);

/* Largest number of stations any user senses in any slot (>= 1). */
int32_t mc_max_degree(const mc_instance* instance);

/* ---------------------------------------------------------------------------
 * Synthetic instances and log ingestion
 */

typedef struct mc_synth_config {
  int32_t stations;
  int32_t users;
  int32_t contents;
  int32_t slots;
  int32_t grid_width;
  int32_t grid_height;
  int32_t stations_per_cell; /* > 1 makes adjacent cells share stations */
  double stay_probability;   /* per-slot probability of not moving */
  double zipf_exponent;
  double preference_noise;   /* fraction of contents rank-shuffled per user */
  uint64_t seed;
} mc_synth_config;

void mc_synth_config_init(mc_synth_config* config);
mc_status mc_generate(const mc_synth_config* config, mc_instance** out);

typedef struct mc_ingest_options {
  const char* mobility_path;  /* timestamp<TAB>device<TAB>ap1[,ap2,...] */
  const char* listening_path; /* user<TAB>content<TAB>plays */
  double slot_seconds;
  int32_t has_window; /* 0: infer [first sample, last sample] from the log */
  double window_start;
  double window_end;
  int32_t top_n;    /* library = top_n most played contents */
  int32_t capacity; /* uniform station capacity */
  uint64_t profile_seed;
} mc_ingest_options;

typedef struct mc_ingest_stats {
  uint64_t mobility_records;
  uint64_t samples_dropped; /* samples outside the window */
  uint64_t listening_records;
} mc_ingest_stats;

void mc_ingest_options_init(mc_ingest_options* options);
/* stats may be NULL. */
mc_status mc_ingest(const mc_ingest_options* options, mc_instance** out,
                    mc_ingest_stats* stats);

/* ---------------------------------------------------------------------------
 * Placements
 */

typedef struct mc_placement mc_placement;

typedef enum mc_algorithm {
  MC_ALG_MOBICACHER = 0,  /* sojourn-time weighted per-station greedy */
  MC_ALG_FEMTOCACHER = 1, /* first-slot snapshot baseline */
  MC_ALG_POPULARITY = 2   /* global popularity baseline */
} mc_algorithm;

mc_status mc_place(const mc_instance* instance, mc_algorithm algorithm, mc_placement** out);

/* Exhaustive optimum. Fails with MC_ERR_BUDGET when the capacity-feasible
 * search space exceeds `budget` candidate placements (pass 0 for the default
 * of 10^7). utility_out may be NULL. */
mc_status mc_place_exact(const mc_instance* instance, uint64_t budget, mc_placement** out,
                         double* utility_out);

mc_status mc_placement_parse(const mc_instance* instance, const char* text, mc_placement** out);
mc_status mc_placement_load(const mc_instance* instance, const char* path, mc_placement** out);
mc_status mc_placement_save(const mc_placement* placement, const char* path);
char* mc_placement_to_text(const mc_placement* placement);
void mc_placement_free(mc_placement* placement);

int32_t mc_placement_cache_size(const mc_placement* placement, int32_t station);
/* Cached content ids are sorted ascending; index in [0, cache_size). */
int32_t mc_placement_cached_content(const mc_placement* placement, int32_t station,
                                    int32_t index);
int32_t mc_placement_contains(const mc_placement* placement, int32_t station, int32_t content);
mc_status mc_placement_validate(const mc_instance* instance, const mc_placement* placement);

/* ---------------------------------------------------------------------------
 * Evaluation
 */

typedef struct mc_report mc_report;

/* utility + total_cost == cost_constant: caching only moves cost between the
 * two sides. Per-slot series sum to the totals. */
mc_status mc_evaluate(const mc_instance* instance, const mc_placement* placement,
                      mc_report** out);
void mc_report_free(mc_report* report);

double mc_report_utility(const mc_report* report);
double mc_report_total_cost(const mc_report* report);
double mc_report_cost_constant(const mc_report* report);
int32_t mc_report_slots(const mc_report* report);
double mc_report_slot_utility(const mc_report* report, int32_t slot);
double mc_report_slot_cost(const mc_report* report, int32_t slot);
int32_t mc_report_max_degree(const mc_report* report);
/* (slot, user, content) triples served from cache / over the backhaul. */
uint64_t mc_report_hits(const mc_report* report);
uint64_t mc_report_misses(const mc_report* report);
char* mc_report_to_text(const mc_report* report);

typedef struct mc_approx_report {
  double greedy_utility;
  double optimal_utility;
  int32_t max_degree;
  double ratio; /* optimal / greedy; 1.0 when the optimum is zero */
} mc_approx_report;

/* Verifies optimal <= max_degree * greedy on this instance. */
mc_status mc_approximation_report(const mc_instance* instance, uint64_t budget,
                                  mc_approx_report* out);

typedef struct mc_cdf_point {
  int32_t length;  /* sojourn run length in slots */
  double fraction; /* cumulative fraction of runs <= length */
} mc_cdf_point;

/* Empirical CDF of per-(user, station) sojourn run lengths. Free the array
 * with mc_cdf_free. count may be 0 for an all-empty trace. */
mc_status mc_sojourn_cdf(const mc_instance* instance, mc_cdf_point** points_out,
                         int32_t* count_out);
void mc_cdf_free(mc_cdf_point* points);

/* ---------------------------------------------------------------------------
 * Experiments
 *
 * A builder for experiment grids. Runners return the complete results file
 * as text ('#' manifest lines, a header line, space-separated rows); reruns
 * with identical settings produce byte-identical text.
 */

typedef struct mc_experiment mc_experiment;

mc_experiment* mc_experiment_new(void);
void mc_experiment_free(mc_experiment* experiment);

mc_status mc_experiment_set_instance_file(mc_experiment* experiment, const char* path);
mc_status mc_experiment_set_synthetic(mc_experiment* experiment,
                                      const mc_synth_config* config);
mc_status mc_experiment_set_seeds(mc_experiment* experiment, const uint64_t* seeds,
                                  int32_t count);
mc_status mc_experiment_set_capacities(mc_experiment* experiment, const int32_t* capacities,
                                       int32_t count);
/* Comma-separated names: mobicacher, femtocacher, popularity, exact. */
mc_status mc_experiment_set_algorithms(mc_experiment* experiment, const char* csv);
mc_status mc_experiment_set_budget(mc_experiment* experiment, uint64_t budget);

/* Utility per capacity x seed x algorithm. */
mc_status mc_run_sweep(const mc_experiment* experiment, char** text_out);
/* Cumulative per-slot utility per algorithm at one capacity. */
mc_status mc_run_timeseries(const mc_experiment* experiment, int32_t capacity,
                            char** text_out);
/* Greedy-vs-optimal ratios with worst case and histogram. */
mc_status mc_run_ratio(const mc_experiment* experiment, char** text_out);
/* Per-seed utilities with mean/stddev and paired differences per pair. */
mc_status mc_run_compare(const mc_experiment* experiment, char** text_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MOBICACHE_H */
