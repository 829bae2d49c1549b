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

#include "mqc/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "mqc/error.hpp"

namespace mqc {

namespace {

ComplexMatrix parse_json(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    if (!doc.is_object() || !doc.contains("n_qubits") || !doc.contains("entries")) {
        throw Error(ErrorKind::ParseError, "expected an object with \"n_qubits\" and \"entries\"");
    }
    if (!doc["n_qubits"].is_number_integer()) {
        throw Error(ErrorKind::ParseError, "\"n_qubits\" must be an integer");
    }
    const auto n = doc["n_qubits"].get<long long>();
    if (n < 1 || n > 12) {
        throw Error(ErrorKind::ParseError, "\"n_qubits\" = " + std::to_string(n) + " outside 1..12");
    }
    const std::size_t dim = std::size_t{1} << n;
    const auto &entries = doc["entries"];
    if (!entries.is_array() || entries.size() != dim * dim) {
        throw Error(ErrorKind::ParseError, "\"entries\" must hold " + std::to_string(dim * dim) + " [re, im] pairs");
    }
    std::vector<cplx> values;
    values.reserve(dim * dim);
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const auto &pair = entries[k];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw Error(ErrorKind::ParseError, "entry " + std::to_string(k) + " is not a [re, im] number pair");
        }
        values.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return ComplexMatrix(dim, std::move(values));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

template <typename T>
bool parse_field(std::string_view field, T &out) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') {
        field.remove_prefix(1);
    }
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
    return ec == std::errc() && ptr == field.data() + field.size();
}

ComplexMatrix parse_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::map<std::pair<std::size_t, std::size_t>, cplx> cells;
    std::size_t declared_dim = 0;
    std::size_t max_index = 0;
    std::size_t line_no = 0;
    bool header_skipped = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = trim(line);
        if (view.empty()) {
            continue;
        }
        if (view.front() == '#') {
            constexpr std::string_view key = "n_qubits=";
            if (auto pos = view.find(key); pos != std::string_view::npos) {
                int n = 0;
                if (!parse_field(view.substr(pos + key.size()), n) || n < 1 || n > 12) {
                    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad n_qubits comment");
                }
                declared_dim = std::size_t{1} << n;
            }
            continue;
        }
        std::vector<std::string_view> fields;
        std::size_t start = 0;
        while (true) {
            const auto comma = view.find(',', start);
            fields.push_back(view.substr(start, comma - start));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        if (fields.size() != 4) {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected i,j,re,im");
        }
        std::size_t i = 0, j = 0;
        double re = 0, im = 0;
        const bool numeric = parse_field(fields[0], i) && parse_field(fields[1], j);
        if (!numeric) {
            if (cells.empty() && !header_skipped) {
                header_skipped = true;  // header row before any data
                continue;
            }
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad row/column index");
        }
        if (!parse_field(fields[2], re) || !parse_field(fields[3], im)) {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad numeric value");
        }
        if (!cells.emplace(std::pair{i, j}, cplx(re, im)).second) {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": duplicate entry (" +
                                                   std::to_string(i) + "," + std::to_string(j) + ")");
        }
        max_index = std::max({max_index, i, j});
    }
    if (cells.empty()) {
        throw Error(ErrorKind::ParseError, "no matrix entries");
    }
    std::size_t dim = declared_dim;
    if (dim == 0) {
        dim = 2;
        while (dim <= max_index) {
            dim *= 2;
        }
    }
    if (max_index >= dim) {
        throw Error(ErrorKind::ParseError, "index " + std::to_string(max_index) + " exceeds declared dimension");
    }
    ComplexMatrix m(dim);
    for (const auto &[ij, z] : cells) {
        m(ij.first, ij.second) = z;
    }
    return m;
}

std::string format_exact(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

ComplexMatrix parse_matrix(std::istream &source) {
    std::ostringstream buffer;
    buffer << source.rdbuf();
    const std::string text = buffer.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        throw Error(ErrorKind::ParseError, "empty input");
    }
    return text[first] == '{' ? parse_json(text) : parse_csv(text);
}

DensityMatrix load_density_matrix(std::istream &source, const ValidationOptions &options) {
    return DensityMatrix::from_matrix(parse_matrix(source), options);
}

DensityMatrix load_density_matrix_file(const std::string &path, const ValidationOptions &options) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot open " + path);
    }
    return load_density_matrix(in, options);
}

void write_matrix(std::ostream &out, const ComplexMatrix &m, MatrixFormat format) {
    const int n = qubits_for_dimension(m.dim());
    if (format == MatrixFormat::Json) {
        out << "{\"n_qubits\": " << n << ", \"entries\": [";
        bool first = true;
        for (const auto &z : m.entries()) {
            out << (first ? "" : ", ") << '[' << format_exact(z.real()) << ", " << format_exact(z.imag()) << ']';
            first = false;
        }
        out << "]}\n";
        return;
    }
    out << "# n_qubits=" << n << '\n';
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            const cplx z = m(i, j);
            if (z != cplx{}) {
                out << i << ',' << j << ',' << format_exact(z.real()) << ',' << format_exact(z.imag()) << '\n';
            }
        }
    }
}

}  // namespace mqc
