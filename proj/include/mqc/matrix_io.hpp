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
#include <string>

#include "mqc/states.hpp"

namespace mqc {

enum class MatrixFormat { Json, Csv };

/// Reads a density matrix in either on-disk format. JSON input is
///   {"n_qubits": N, "entries": [[re, im], ...]}   (row-major, 4^N pairs)
/// and CSV input is one "i,j,re,im" row per entry (0-based indices; entries
/// that are not listed are zero; a header line and '#' comments are skipped).
/// The format is sniffed from the first non-blank character.
DensityMatrix load_density_matrix(std::istream &source, const ValidationOptions &options = {});
DensityMatrix load_density_matrix_file(const std::string &path, const ValidationOptions &options = {});

/// Raw matrix without density-matrix validation.
ComplexMatrix parse_matrix(std::istream &source);

void write_matrix(std::ostream &out, const ComplexMatrix &m, MatrixFormat format);

}  // namespace mqc
