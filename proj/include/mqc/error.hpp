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

#include <stdexcept>
#include <string>
#include <string_view>

namespace mqc {

enum class ErrorKind {
    NotHermitian,
    NotPSD,
    ConvergenceFailure,
    DimensionOverflow,
    DimensionMismatch,
    EmptySubset,
    TooFewQubits,
    ExcitationOutOfRange,
    ParameterOutOfRange,
    ParseError,
    InvariantViolation,
    WrongDimension,
    WrongQubitCount,
    NegativeRadicand,
    NonMonotoneFamily,
    InvalidPartition,
    NotInFamily,
    UnsupportedSource,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (notably the CLI) can map it to an exit status.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {
    }

    ErrorKind kind() const noexcept {
        return kind_;
    }

    /// True for failures caused by the caller's input rather than by the numerics.
    bool is_input_error() const noexcept;

   private:
    ErrorKind kind_;
};

}  // namespace mqc
