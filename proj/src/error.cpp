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

#include "mqc/error.hpp"

namespace mqc {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotHermitian:
            return "NotHermitian";
        case ErrorKind::NotPSD:
            return "NotPSD";
        case ErrorKind::ConvergenceFailure:
            return "ConvergenceFailure";
        case ErrorKind::DimensionOverflow:
            return "DimensionOverflow";
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::EmptySubset:
            return "EmptySubset";
        case ErrorKind::TooFewQubits:
            return "TooFewQubits";
        case ErrorKind::ExcitationOutOfRange:
            return "ExcitationOutOfRange";
        case ErrorKind::ParameterOutOfRange:
            return "ParameterOutOfRange";
        case ErrorKind::ParseError:
            return "ParseError";
        case ErrorKind::InvariantViolation:
            return "InvariantViolation";
        case ErrorKind::WrongDimension:
            return "WrongDimension";
        case ErrorKind::WrongQubitCount:
            return "WrongQubitCount";
        case ErrorKind::NegativeRadicand:
            return "NegativeRadicand";
        case ErrorKind::NonMonotoneFamily:
            return "NonMonotoneFamily";
        case ErrorKind::InvalidPartition:
            return "InvalidPartition";
        case ErrorKind::NotInFamily:
            return "NotInFamily";
        case ErrorKind::UnsupportedSource:
            return "UnsupportedSource";
    }
    return "Unknown";
}

bool Error::is_input_error() const noexcept {
    switch (kind_) {
        case ErrorKind::ConvergenceFailure:
        case ErrorKind::NegativeRadicand:
        case ErrorKind::NonMonotoneFamily:
            return false;
        default:
            return true;
    }
}

}  // namespace mqc
