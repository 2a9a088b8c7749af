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
#include <string_view>
#include <vector>

#include "model.hpp"

namespace mobicache {

// One sample of a WiFi topology-discovery style mobility log: at `timestamp`
// the device sensed the listed access points (possibly none).
struct MobilityRecord {
  double timestamp = 0;
  std::string device;
  std::vector<std::string> aps;
};

struct RawMobilityLog {
  std::vector<MobilityRecord> records;
};

// Input line format: `timestamp<TAB>device_id<TAB>ap1[,ap2,...]`, empty third
// field meaning no sensed APs. Throws Error{parse} with the line number.
RawMobilityLog parse_mobility_log(std::string_view text);

// A mobility log discretized onto slots of `slot_seconds`, devices and APs
// mapped to dense ids in order of first appearance.
struct SlottedTrace {
  ReachabilityTrace trace;
  std::vector<std::string> device_names;  // index = user id
  std::vector<std::string> ap_names;      // index = station id
  std::uint64_t samples_used = 0;
  std::uint64_t samples_dropped = 0;      // outside [window_start, window_end)
};

// Slot t covers [start + t*slot_seconds, start + (t+1)*slot_seconds). All
// sightings of a device within one slot union. A window entirely outside the
// log yields an all-empty trace (samples_dropped tells the caller to warn).
SlottedTrace slot_mobility_log(const RawMobilityLog& log, double slot_seconds,
                               double window_start, double window_end);

struct ListeningRecord {
  std::string user;
  std::string content;
  std::uint64_t plays = 0;
};

struct ListeningLog {
  std::vector<ListeningRecord> records;
};

// Input line format: `user_id<TAB>content_key<TAB>play_count`, play_count >= 1.
// Repeated (user, content) pairs aggregate by summing.
ListeningLog parse_listening_log(std::string_view text);

struct PreferenceTable {
  CostMatrix costs;                       // log users x library
  std::vector<std::string> user_names;    // index = row
  std::vector<std::string> content_keys;  // index = content id
};

// Builds the library from the top_n globally most-played contents (ties by
// key order) and sets c(i, l) = plays(i, l) / total plays of user i, where
// the total counts every play, also of contents outside the library. Row
// sums are therefore <= 1.
PreferenceTable preferences_from_listening(const ListeningLog& log, std::size_t top_n);

// Assigns each of `trace_users` a profile row drawn uniformly at random with
// replacement, deterministically in the seed.
CostMatrix assign_profiles(std::size_t trace_users, const CostMatrix& profiles,
                           std::uint64_t seed);

// Seeded synthetic instance: users do a Markov walk on a grid of cells, each
// cell reaches `stations_per_cell` stations (adjacent cells share stations
// when > 1, raising the max degree), and preferences follow a Zipf law with
// a per-user partial rank shuffle. Station capacities are left at 0; sweeps
// and the generate command set them.
struct SyntheticConfig {
  int stations = 6;
  int users = 10;
  int contents = 30;
  int slots = 40;
  int grid_width = 3;
  int grid_height = 2;
  int stations_per_cell = 1;
  double stay_probability = 0.6;
  double zipf_exponent = 0.8;
  double preference_noise = 0.2;
  std::uint64_t seed = 0;
};

Instance generate_synthetic(const SyntheticConfig& config);

// Empirical CDF of sojourn lengths: maximal runs of consecutive slots during
// which a station stays inside a user's reachable set.
struct CdfPoint {
  int length = 0;       // run length in slots
  double fraction = 0;  // cumulative fraction of runs <= length
};

std::vector<CdfPoint> sojourn_cdf(const Instance& instance);

struct IngestOptions {
  double slot_seconds = 20.0;
  std::optional<double> window_start;  // default: first sample timestamp
  std::optional<double> window_end;    // default: just past the last sample
  std::size_t top_n = 200;
  int capacity = 0;  // uniform station capacity
  std::uint64_t profile_seed = 0;
};

struct IngestResult {
  Instance instance;
  std::vector<std::string> device_names;
  std::vector<std::string> ap_names;
  std::vector<std::string> content_keys;
  std::uint64_t mobility_records = 0;
  std::uint64_t samples_dropped = 0;
  std::uint64_t listening_records = 0;
};

// Full pipeline: slot the mobility log, build preference profiles from the
// listening log, and randomly associate a profile with every device.
IngestResult ingest_logs(const RawMobilityLog& mobility, const ListeningLog& listening,
                         const IngestOptions& options);

}  // namespace mobicache
