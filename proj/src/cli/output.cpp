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

#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace mqc::cli {

std::optional<Format> parse_format(std::string_view name) {
    if (name == "table") return Format::Table;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    return std::nullopt;
}

std::string format_number(double v) {
    if (v == 0.0) {
        return "0";  // drops the sign of -0
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

double round_significant(double v) {
    if (!std::isfinite(v)) {
        return v;
    }
    return std::strtod(format_number(v).c_str(), nullptr);
}

namespace {

std::string csv_cell(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

void render_table(std::ostream &out, const Table &t) {
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        width[c] = t.columns[c].size();
        for (const auto &row : t.rows) {
            width[c] = std::max(width[c], row.at(c).size());
        }
    }
    if (!t.title.empty()) {
        out << t.title << '\n';
    }
    auto line = [&](const std::vector<std::string> &cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            s += cells[c];
            if (c + 1 < cells.size()) {
                s += std::string(width[c] - cells[c].size() + 2, ' ');
            }
        }
        out << s << '\n';
    };
    line(t.columns);
    std::vector<std::string> rule;
    for (std::size_t w : width) {
        rule.emplace_back(w, '-');
    }
    line(rule);
    for (const auto &row : t.rows) {
        line(row);
    }
}

}  // namespace

void render(std::ostream &out, const Report &report, Format format) {
    switch (format) {
        case Format::Json:
            out << report.json.dump(2) << '\n';
            return;
        case Format::Csv:
            for (const auto &t : report.tables) {
                out << "# " << t.title << '\n';
                for (std::size_t c = 0; c < t.columns.size(); ++c) {
                    out << (c ? "," : "") << csv_cell(t.columns[c]);
                }
                out << '\n';
                for (const auto &row : t.rows) {
                    for (std::size_t c = 0; c < row.size(); ++c) {
                        out << (c ? "," : "") << csv_cell(row[c]);
                    }
                    out << '\n';
                }
            }
            return;
        case Format::Table:
            for (std::size_t k = 0; k < report.tables.size(); ++k) {
                if (k) {
                    out << '\n';
                }
                render_table(out, report.tables[k]);
            }
            return;
    }
}

}  // namespace mqc::cli
