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

#include "text_format.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

namespace mobicache {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& message) {
  throw Error(Error::Kind::parse, "line " + std::to_string(line_no) + ": " + message);
}

[[noreturn]] void value_fail(std::size_t line_no, const std::string& message) {
  throw Error(Error::Kind::validation, "line " + std::to_string(line_no) + ": " + message);
}

// Splits input into non-empty, non-comment lines, tracking line numbers.
struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line_no = 0;

  bool next(std::string_view& line) {
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view raw = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      const std::size_t first = raw.find_first_not_of(" \t");
      if (first == std::string_view::npos) continue;
      if (raw[first] == '#') continue;
      line = raw;
      return true;
    }
    return false;
  }
};

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::vector<std::string_view> split_on(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, end - start));
    start = end + 1;
  }
}

std::int64_t parse_int(std::string_view token, std::size_t line_no) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value);
  if (ec != std::errc() || ptr != token.end()) {
    parse_fail(line_no, "expected integer, got '" + std::string(token) + "'");
  }
  return value;
}

double parse_real(std::string_view token, std::size_t line_no) {
  double value = 0;
  const auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value);
  if (ec != std::errc() || ptr != token.end()) {
    parse_fail(line_no, "expected number, got '" + std::string(token) + "'");
  }
  return value;
}

std::size_t parse_index(std::string_view token, std::size_t limit, const char* what,
                        std::size_t line_no) {
  const std::int64_t value = parse_int(token, line_no);
  if (value < 0 || static_cast<std::size_t>(value) >= limit) {
    value_fail(line_no, std::string(what) + " id " + std::to_string(value) +
                            " out of range (count " + std::to_string(limit) + ")");
  }
  return static_cast<std::size_t>(value);
}

std::vector<std::string_view> expect_header(LineReader& reader, std::string_view key) {
  std::string_view line;
  if (!reader.next(line)) {
    parse_fail(reader.line_no + 1, "unexpected end of input, expected '" + std::string(key) + "'");
  }
  auto tokens = split_ws(line);
  if (tokens.empty() || tokens[0] != key) {
    parse_fail(reader.line_no, "expected '" + std::string(key) + "' line, got '" +
                                   std::string(line) + "'");
  }
  return tokens;
}

void append_id_list(std::string& out, const std::vector<int>& ids) {
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(ids[k]);
  }
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  (void)ec;
  return std::string(buffer, ptr);
}

Instance parse_instance(std::string_view text) {
  LineReader reader{text};
  Instance instance;

  auto tokens = expect_header(reader, "stations");
  if (tokens.size() != 2) parse_fail(reader.line_no, "expected 'stations <n>'");
  const std::int64_t n_stations = parse_int(tokens[1], reader.line_no);
  if (n_stations < 0) value_fail(reader.line_no, "station count must be >= 0");

  tokens = expect_header(reader, "capacities");
  if (tokens.size() != static_cast<std::size_t>(n_stations) + 1) {
    parse_fail(reader.line_no, "expected " + std::to_string(n_stations) +
                                   " capacity values, got " + std::to_string(tokens.size() - 1));
  }
  instance.capacities.reserve(n_stations);
  for (std::size_t k = 1; k < tokens.size(); ++k) {
    const std::int64_t c = parse_int(tokens[k], reader.line_no);
    if (c < 0) value_fail(reader.line_no, "negative capacity " + std::to_string(c));
    instance.capacities.push_back(static_cast<int>(c));
  }

  tokens = expect_header(reader, "users");
  if (tokens.size() != 2) parse_fail(reader.line_no, "expected 'users <m>'");
  const std::int64_t n_users = parse_int(tokens[1], reader.line_no);
  if (n_users < 0) value_fail(reader.line_no, "user count must be >= 0");
  instance.num_users = static_cast<std::size_t>(n_users);

  tokens = expect_header(reader, "contents");
  if (tokens.size() != 2) parse_fail(reader.line_no, "expected 'contents <k>'");
  const std::int64_t n_contents = parse_int(tokens[1], reader.line_no);
  if (n_contents < 1) value_fail(reader.line_no, "library must contain at least one content");
  instance.library_size = static_cast<std::size_t>(n_contents);

  tokens = expect_header(reader, "slots");
  if (tokens.size() != 2) parse_fail(reader.line_no, "expected 'slots <t>'");
  const std::int64_t n_slots = parse_int(tokens[1], reader.line_no);
  if (n_slots < 1) value_fail(reader.line_no, "empty trace: at least one slot is required");

  tokens = expect_header(reader, "slot_seconds");
  if (tokens.size() != 2) parse_fail(reader.line_no, "expected 'slot_seconds <s>'");
  instance.trace.slot_seconds = parse_real(tokens[1], reader.line_no);
  if (!std::isfinite(instance.trace.slot_seconds) || instance.trace.slot_seconds <= 0) {
    value_fail(reader.line_no, "slot_seconds must be positive and finite");
  }

  instance.costs = CostMatrix::zeros(instance.num_users, instance.library_size);
  instance.trace.slots.assign(
      static_cast<std::size_t>(n_slots),
      std::vector<std::vector<int>>(instance.num_users));
  std::vector<char> cost_seen(instance.num_users * instance.library_size, 0);

  std::string_view line;
  while (reader.next(line)) {
    tokens = split_ws(line);
    if (tokens[0] == "cost") {
      if (tokens.size() != 4) parse_fail(reader.line_no, "expected 'cost <user> <content> <value>'");
      const std::size_t user = parse_index(tokens[1], instance.num_users, "user", reader.line_no);
      const std::size_t content =
          parse_index(tokens[2], instance.library_size, "content", reader.line_no);
      const double value = parse_real(tokens[3], reader.line_no);
      if (!std::isfinite(value)) {
        value_fail(reader.line_no, "cost(user " + std::to_string(user) + ", content " +
                                       std::to_string(content) + ") is not finite");
      }
      if (value < 0) {
        value_fail(reader.line_no, "cost(user " + std::to_string(user) + ", content " +
                                       std::to_string(content) + ") is negative");
      }
      char& seen = cost_seen[user * instance.library_size + content];
      if (seen) {
        parse_fail(reader.line_no, "duplicate cost entry for user " + std::to_string(user) +
                                       ", content " + std::to_string(content));
      }
      seen = 1;
      instance.costs.at(user, content) = value;
    } else if (tokens[0] == "reach") {
      if (tokens.size() != 4) parse_fail(reader.line_no, "expected 'reach <slot> <user> <ids>'");
      const std::size_t slot =
          parse_index(tokens[1], instance.trace.slots.size(), "slot", reader.line_no);
      const std::size_t user = parse_index(tokens[2], instance.num_users, "user", reader.line_no);
      auto& reach = instance.trace.slots[slot][user];
      for (std::string_view part : split_on(tokens[3], ',')) {
        if (part.empty()) parse_fail(reader.line_no, "empty station id in list");
        const std::int64_t id = parse_int(part, reader.line_no);
        if (id < 0 || id >= n_stations) {
          value_fail(reader.line_no, "slot " + std::to_string(slot) + ", user " +
                                         std::to_string(user) + ": unknown station id " +
                                         std::to_string(id) + " (instance has " +
                                         std::to_string(n_stations) + " stations)");
        }
        reach.push_back(static_cast<int>(id));
      }
    } else {
      parse_fail(reader.line_no, "unknown directive '" + std::string(tokens[0]) + "'");
    }
  }

  return validate_instance(std::move(instance));
}

std::string serialize_instance(const Instance& instance) {
  std::string out;
  out += "stations " + std::to_string(instance.num_stations()) + "\n";
  out += "capacities";
  for (int c : instance.capacities) out += " " + std::to_string(c);
  out += "\n";
  out += "users " + std::to_string(instance.num_users) + "\n";
  out += "contents " + std::to_string(instance.library_size) + "\n";
  out += "slots " + std::to_string(instance.num_slots()) + "\n";
  out += "slot_seconds " + format_double(instance.trace.slot_seconds) + "\n";
  for (std::size_t i = 0; i < instance.num_users; ++i) {
    for (std::size_t l = 0; l < instance.library_size; ++l) {
      const double v = instance.costs.at(i, l);
      if (v != 0.0) {
        out += "cost " + std::to_string(i) + " " + std::to_string(l) + " " + format_double(v) + "\n";
      }
    }
  }
  for (std::size_t t = 0; t < instance.num_slots(); ++t) {
    for (std::size_t i = 0; i < instance.num_users; ++i) {
      const auto& reach = instance.trace.slots[t][i];
      if (reach.empty()) continue;
      out += "reach " + std::to_string(t) + " " + std::to_string(i) + " ";
      append_id_list(out, reach);
      out += "\n";
    }
  }
  return out;
}

Placement parse_placement(std::string_view text, const Instance& instance) {
  LineReader reader{text};
  Placement placement = empty_placement(instance);
  std::string_view line;
  while (reader.next(line)) {
    auto tokens = split_ws(line);
    if (tokens[0] != "cache") {
      parse_fail(reader.line_no, "unknown directive '" + std::string(tokens[0]) + "'");
    }
    if (tokens.size() != 3) parse_fail(reader.line_no, "expected 'cache <bs_id> <ids>'");
    const std::size_t station =
        parse_index(tokens[1], instance.num_stations(), "station", reader.line_no);
    for (std::string_view part : split_on(tokens[2], ',')) {
      if (part.empty()) parse_fail(reader.line_no, "empty content id in list");
      const std::int64_t id = parse_int(part, reader.line_no);
      placement.cached[station].push_back(static_cast<int>(id));
    }
  }
  return validate_placement(instance, std::move(placement));
}

std::string serialize_placement(const Placement& placement) {
  std::string out;
  for (std::size_t f = 0; f < placement.cached.size(); ++f) {
    if (placement.cached[f].empty()) continue;
    out += "cache " + std::to_string(f) + " ";
    append_id_list(out, placement.cached[f]);
    out += "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Error::Kind::io, "cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(Error::Kind::io, "error reading '" + path + "'");
  return std::move(buffer).str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Error::Kind::io, "cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(Error::Kind::io, "error writing '" + path + "'");
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

void save_instance(const Instance& instance, const std::string& path) {
  write_file(path, serialize_instance(instance));
}

Placement load_placement(const std::string& path, const Instance& instance) {
  return parse_placement(read_file(path), instance);
}

void save_placement(const Placement& placement, const std::string& path) {
  write_file(path, serialize_placement(placement));
}

}  // namespace mobicache
