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

#include <string>
#include <string_view>

#include "model.hpp"

namespace mobicache {

// Shortest round-trippable decimal representation, locale-independent.
// Integer-valued doubles print without a fractional part ("28", not "28.0").
std::string format_double(double value);

// Instance file format (line-oriented, '#' comments and blank lines allowed):
//   stations <n>
//   capacities <c_0> ... <c_{n-1}>
//   users <m>
//   contents <k>
//   slots <t>
//   slot_seconds <s>
//   cost <user_id> <content_id> <value>          (unlisted pairs are 0)
//   reach <slot> <user_id> <bs_id>[,<bs_id>...]  (unlisted pairs are empty)
// Slot ids are 0-based. Header lines must appear first, in the order above.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);
Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

// Placement file format: one `cache <bs_id> <content_id>[,<content_id>...]`
// line per station with a non-empty cache. Repeated lines for a station
// union. Stations without a line cache nothing.
Placement parse_placement(std::string_view text, const Instance& instance);
std::string serialize_placement(const Placement& placement);
Placement load_placement(const std::string& path, const Instance& instance);
void save_placement(const Placement& placement, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace mobicache
