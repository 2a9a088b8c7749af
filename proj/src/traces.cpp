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

#include "traces.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "rng.hpp"

namespace mobicache {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& message) {
  throw Error(Error::Kind::parse, "line " + std::to_string(line_no) + ": " + message);
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = line.find('\t', start);
    if (end == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, end - start));
    start = end + 1;
  }
}

// Iterates physical lines (mobility/listening logs have no comment syntax;
// blank lines are skipped).
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    fn(line, line_no);
  }
}

// Dense id assignment in order of first appearance.
struct IdMap {
  std::unordered_map<std::string, int> index;
  std::vector<std::string> names;

  int get(const std::string& name) {
    const auto [it, inserted] = index.try_emplace(name, static_cast<int>(names.size()));
    if (inserted) names.push_back(name);
    return it->second;
  }
};

}  // namespace

RawMobilityLog parse_mobility_log(std::string_view text) {
  RawMobilityLog log;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    const auto fields = split_tabs(line);
    if (fields.size() != 3) {
      parse_fail(line_no, "expected 3 tab-separated fields (timestamp, device, aps), got " +
                              std::to_string(fields.size()));
    }
    MobilityRecord record;
    const auto [ptr, ec] =
        std::from_chars(fields[0].begin(), fields[0].end(), record.timestamp);
    if (ec != std::errc() || ptr != fields[0].end() || !std::isfinite(record.timestamp)) {
      parse_fail(line_no, "bad timestamp '" + std::string(fields[0]) + "'");
    }
    if (fields[1].empty()) parse_fail(line_no, "empty device id");
    record.device = std::string(fields[1]);
    if (!fields[2].empty()) {
      std::size_t start = 0;
      const std::string_view aps = fields[2];
      while (start <= aps.size()) {
        std::size_t end = aps.find(',', start);
        if (end == std::string_view::npos) end = aps.size();
        if (end == start) parse_fail(line_no, "empty AP name in list");
        record.aps.emplace_back(aps.substr(start, end - start));
        start = end + 1;
      }
    }
    log.records.push_back(std::move(record));
  });
  return log;
}

SlottedTrace slot_mobility_log(const RawMobilityLog& log, double slot_seconds,
                               double window_start, double window_end) {
  if (!std::isfinite(slot_seconds) || slot_seconds <= 0) {
    throw Error(Error::Kind::invalid_argument, "slot_seconds must be positive");
  }
  if (!(window_end > window_start)) {
    throw Error(Error::Kind::invalid_argument, "window is empty (end <= start)");
  }
  const double span = window_end - window_start;
  const double slots_needed = std::ceil(span / slot_seconds);
  if (!(slots_needed <= 10'000'000.0)) {
    throw Error(Error::Kind::invalid_argument,
                "window spans " + std::to_string(slots_needed) + " slots; refusing");
  }
  const std::size_t n_slots = std::max<std::size_t>(1, static_cast<std::size_t>(slots_needed));

  SlottedTrace result;
  IdMap devices;
  IdMap aps;
  // Map every device and AP in the log so the id maps do not depend on the
  // window choice.
  for (const auto& record : log.records) {
    devices.get(record.device);
    for (const auto& ap : record.aps) aps.get(ap);
  }

  result.trace.slot_seconds = slot_seconds;
  result.trace.slots.assign(n_slots,
                            std::vector<std::vector<int>>(devices.names.size()));
  for (const auto& record : log.records) {
    if (record.timestamp < window_start || record.timestamp >= window_end) {
      ++result.samples_dropped;
      continue;
    }
    ++result.samples_used;
    auto slot = static_cast<std::size_t>((record.timestamp - window_start) / slot_seconds);
    if (slot >= n_slots) slot = n_slots - 1;
    auto& reach = result.trace.slots[slot][devices.index.at(record.device)];
    for (const auto& ap : record.aps) reach.push_back(aps.index.at(ap));
  }
  for (auto& slot : result.trace.slots) {
    for (auto& reach : slot) {
      std::sort(reach.begin(), reach.end());
      reach.erase(std::unique(reach.begin(), reach.end()), reach.end());
    }
  }
  result.device_names = std::move(devices.names);
  result.ap_names = std::move(aps.names);
  return result;
}

ListeningLog parse_listening_log(std::string_view text) {
  ListeningLog log;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    const auto fields = split_tabs(line);
    if (fields.size() != 3) {
      parse_fail(line_no, "expected 3 tab-separated fields (user, content, plays), got " +
                              std::to_string(fields.size()));
    }
    if (fields[0].empty()) parse_fail(line_no, "empty user id");
    if (fields[1].empty()) parse_fail(line_no, "empty content key");
    ListeningRecord record;
    record.user = std::string(fields[0]);
    record.content = std::string(fields[1]);
    const auto [ptr, ec] = std::from_chars(fields[2].begin(), fields[2].end(), record.plays);
    if (ec != std::errc() || ptr != fields[2].end()) {
      parse_fail(line_no, "bad play count '" + std::string(fields[2]) + "'");
    }
    if (record.plays == 0) parse_fail(line_no, "play count must be >= 1");
    log.records.push_back(std::move(record));
  });
  return log;
}

PreferenceTable preferences_from_listening(const ListeningLog& log, std::size_t top_n) {
  if (log.records.empty()) {
    throw Error(Error::Kind::invalid_argument, "listening log is empty");
  }
  if (top_n == 0) {
    throw Error(Error::Kind::invalid_argument, "top_n must be >= 1");
  }

  IdMap users;
  IdMap contents;
  for (const auto& record : log.records) {
    users.get(record.user);
    contents.get(record.content);
  }

  // Aggregate plays per (user, content) and per content globally.
  std::vector<std::uint64_t> plays(users.names.size() * contents.names.size(), 0);
  std::vector<std::uint64_t> global(contents.names.size(), 0);
  std::vector<std::uint64_t> totals(users.names.size(), 0);
  for (const auto& record : log.records) {
    const auto u = static_cast<std::size_t>(users.index.at(record.user));
    const auto c = static_cast<std::size_t>(contents.index.at(record.content));
    plays[u * contents.names.size() + c] += record.plays;
    global[c] += record.plays;
    totals[u] += record.plays;
  }

  std::vector<int> order(contents.names.size());
  for (std::size_t c = 0; c < order.size(); ++c) order[c] = static_cast<int>(c);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (global[a] != global[b]) return global[a] > global[b];
    return contents.names[a] < contents.names[b];
  });
  order.resize(std::min(top_n, order.size()));

  PreferenceTable table;
  table.user_names = users.names;
  table.content_keys.reserve(order.size());
  for (int c : order) table.content_keys.push_back(contents.names[c]);
  table.costs = CostMatrix::zeros(users.names.size(), order.size());
  for (std::size_t u = 0; u < users.names.size(); ++u) {
    if (totals[u] == 0) continue;
    for (std::size_t l = 0; l < order.size(); ++l) {
      const std::uint64_t p = plays[u * contents.names.size() + order[l]];
      table.costs.at(u, l) =
          static_cast<double>(p) / static_cast<double>(totals[u]);
    }
  }
  return table;
}

CostMatrix assign_profiles(std::size_t trace_users, const CostMatrix& profiles,
                           std::uint64_t seed) {
  if (profiles.users == 0) {
    throw Error(Error::Kind::invalid_argument, "no preference profiles to assign");
  }
  Rng rng(seed);
  CostMatrix result = CostMatrix::zeros(trace_users, profiles.contents);
  for (std::size_t u = 0; u < trace_users; ++u) {
    const auto pick = static_cast<std::size_t>(rng.next_below(profiles.users));
    for (std::size_t l = 0; l < profiles.contents; ++l) {
      result.at(u, l) = profiles.at(pick, l);
    }
  }
  return result;
}

namespace {

void check_synthetic(const SyntheticConfig& config) {
  auto positive = [](int v, const char* name) {
    if (v < 1) {
      throw Error(Error::Kind::invalid_argument,
                  std::string(name) + " must be >= 1, got " + std::to_string(v));
    }
  };
  positive(config.stations, "stations");
  positive(config.users, "users");
  positive(config.contents, "contents");
  positive(config.slots, "slots");
  positive(config.grid_width, "grid_width");
  positive(config.grid_height, "grid_height");
  positive(config.stations_per_cell, "stations_per_cell");
  auto in_unit = [](double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(Error::Kind::invalid_argument,
                  std::string(name) + " must be in [0, 1]");
    }
  };
  in_unit(config.stay_probability, "stay_probability");
  in_unit(config.preference_noise, "preference_noise");
  if (!(config.zipf_exponent >= 0.0) || !std::isfinite(config.zipf_exponent)) {
    throw Error(Error::Kind::invalid_argument, "zipf_exponent must be >= 0");
  }
}

}  // namespace

Instance generate_synthetic(const SyntheticConfig& config) {
  check_synthetic(config);
  std::uint64_t derive = config.seed;
  Rng mobility_rng(splitmix64(derive));
  Rng preference_rng(splitmix64(derive));

  const int cells = config.grid_width * config.grid_height;
  const auto n_users = static_cast<std::size_t>(config.users);
  const auto n_slots = static_cast<std::size_t>(config.slots);
  const auto library = static_cast<std::size_t>(config.contents);

  Instance instance;
  instance.capacities.assign(static_cast<std::size_t>(config.stations), 0);
  instance.num_users = n_users;
  instance.library_size = library;
  instance.trace.slot_seconds = 20.0;

  // Markov walk on the cell grid: stay put with stay_probability, otherwise
  // move to a uniformly random 4-neighbor.
  std::vector<int> cell(n_users);
  for (auto& c : cell) c = static_cast<int>(mobility_rng.next_below(cells));

  auto reach_of_cell = [&](int c) {
    std::vector<int> reach;
    for (int j = 0; j < config.stations_per_cell; ++j) {
      reach.push_back((c + j) % config.stations);
    }
    std::sort(reach.begin(), reach.end());
    reach.erase(std::unique(reach.begin(), reach.end()), reach.end());
    return reach;
  };

  instance.trace.slots.assign(n_slots, std::vector<std::vector<int>>(n_users));
  std::vector<int> neighbors;
  for (std::size_t t = 0; t < n_slots; ++t) {
    if (t > 0) {
      for (std::size_t i = 0; i < n_users; ++i) {
        if (mobility_rng.next_double() < config.stay_probability) continue;
        const int x = cell[i] % config.grid_width;
        const int y = cell[i] / config.grid_width;
        neighbors.clear();
        if (x > 0) neighbors.push_back(cell[i] - 1);
        if (x + 1 < config.grid_width) neighbors.push_back(cell[i] + 1);
        if (y > 0) neighbors.push_back(cell[i] - config.grid_width);
        if (y + 1 < config.grid_height) neighbors.push_back(cell[i] + config.grid_width);
        if (neighbors.empty()) continue;  // 1x1 grid
        cell[i] = neighbors[mobility_rng.next_below(neighbors.size())];
      }
    }
    for (std::size_t i = 0; i < n_users; ++i) {
      instance.trace.slots[t][i] = reach_of_cell(cell[i]);
    }
  }

  // Zipf preferences over a per-user rank assignment: rank r gets weight
  // (r+1)^-s; preference_noise controls the fraction of contents whose ranks
  // are shuffled per user. Rows normalize to sum 1.
  std::vector<double> zipf(library);
  for (std::size_t r = 0; r < library; ++r) {
    zipf[r] = std::pow(static_cast<double>(r + 1), -config.zipf_exponent);
  }
  const auto shuffled =
      static_cast<std::size_t>(std::llround(config.preference_noise * static_cast<double>(library)));

  instance.costs = CostMatrix::zeros(n_users, library);
  std::vector<int> rank(library);
  std::vector<std::size_t> positions(library);
  std::vector<int> selected_ranks;
  for (std::size_t i = 0; i < n_users; ++i) {
    for (std::size_t l = 0; l < library; ++l) rank[l] = static_cast<int>(l);
    if (shuffled >= 2) {
      for (std::size_t l = 0; l < library; ++l) positions[l] = l;
      for (std::size_t j = 0; j < shuffled; ++j) {
        const auto k = j + preference_rng.next_below(library - j);
        std::swap(positions[j], positions[k]);
      }
      selected_ranks.clear();
      for (std::size_t j = 0; j < shuffled; ++j) selected_ranks.push_back(rank[positions[j]]);
      for (std::size_t j = selected_ranks.size() - 1; j > 0; --j) {
        const auto k = preference_rng.next_below(j + 1);
        std::swap(selected_ranks[j], selected_ranks[k]);
      }
      for (std::size_t j = 0; j < shuffled; ++j) rank[positions[j]] = selected_ranks[j];
    }
    double row_sum = 0;
    for (std::size_t l = 0; l < library; ++l) row_sum += zipf[rank[l]];
    for (std::size_t l = 0; l < library; ++l) {
      instance.costs.at(i, l) = zipf[rank[l]] / row_sum;
    }
  }

  return validate_instance(std::move(instance));
}

std::vector<CdfPoint> sojourn_cdf(const Instance& instance) {
  // Run lengths of consecutive slots with station f inside user i's set.
  std::vector<std::uint64_t> length_counts;
  std::uint64_t total_runs = 0;
  const std::size_t n_slots = instance.num_slots();
  for (std::size_t i = 0; i < instance.num_users; ++i) {
    for (std::size_t f = 0; f < instance.num_stations(); ++f) {
      std::size_t run = 0;
      for (std::size_t t = 0; t <= n_slots; ++t) {
        const bool inside =
            t < n_slots && std::binary_search(instance.trace.slots[t][i].begin(),
                                              instance.trace.slots[t][i].end(),
                                              static_cast<int>(f));
        if (inside) {
          ++run;
        } else if (run > 0) {
          if (length_counts.size() < run + 1) length_counts.resize(run + 1, 0);
          ++length_counts[run];
          ++total_runs;
          run = 0;
        }
      }
    }
  }
  std::vector<CdfPoint> cdf;
  std::uint64_t cumulative = 0;
  for (std::size_t length = 1; length < length_counts.size(); ++length) {
    if (length_counts[length] == 0) continue;
    cumulative += length_counts[length];
    cdf.push_back(CdfPoint{static_cast<int>(length),
                           static_cast<double>(cumulative) / static_cast<double>(total_runs)});
  }
  return cdf;
}

IngestResult ingest_logs(const RawMobilityLog& mobility, const ListeningLog& listening,
                         const IngestOptions& options) {
  double start = 0;
  double end = 0;
  if (options.window_start && options.window_end) {
    start = *options.window_start;
    end = *options.window_end;
  } else if (!options.window_start && !options.window_end) {
    if (mobility.records.empty()) {
      throw Error(Error::Kind::invalid_argument,
                  "cannot infer a window from an empty mobility log; pass one explicitly");
    }
    start = std::numeric_limits<double>::infinity();
    end = -std::numeric_limits<double>::infinity();
    for (const auto& record : mobility.records) {
      start = std::min(start, record.timestamp);
      end = std::max(end, record.timestamp);
    }
    end = std::nextafter(end, std::numeric_limits<double>::infinity());
  } else {
    throw Error(Error::Kind::invalid_argument,
                "window start and end must be given together");
  }

  SlottedTrace slotted = slot_mobility_log(mobility, options.slot_seconds, start, end);
  PreferenceTable preferences = preferences_from_listening(listening, options.top_n);

  IngestResult result;
  result.mobility_records = mobility.records.size();
  result.samples_dropped = slotted.samples_dropped;
  result.listening_records = listening.records.size();

  Instance instance;
  instance.capacities.assign(slotted.ap_names.size(), options.capacity);
  instance.num_users = slotted.device_names.size();
  instance.library_size = preferences.content_keys.size();
  instance.costs =
      assign_profiles(instance.num_users, preferences.costs, options.profile_seed);
  instance.trace = std::move(slotted.trace);

  result.instance = validate_instance(std::move(instance));
  result.device_names = std::move(slotted.device_names);
  result.ap_names = std::move(slotted.ap_names);
  result.content_keys = std::move(preferences.content_keys);
  return result;
}

}  // namespace mobicache
