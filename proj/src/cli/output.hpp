// Copyright 2026 The mqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace mqc::cli {

enum class Format { Table, Csv, Json };

std::optional<Format> parse_format(std::string_view name);

/// 9 significant digits, round-half-even on the exact binary value.
std::string format_number(double v);
/// The same rounding, returned as a double for JSON output.
double round_significant(double v);

struct Table {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

/// Everything a command prints: tables for the human/CSV views and a JSON
/// document whose field names mirror the library structs.
struct Report {
    std::vector<Table> tables;
    nlohmann::ordered_json json = nlohmann::ordered_json::object();
};

void render(std::ostream &out, const Report &report, Format format);

}  // namespace mqc::cli
