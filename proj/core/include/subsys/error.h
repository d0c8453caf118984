// Copyright 2026 The subsys Authors
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

#ifndef SUBSYS_ERROR_H
#define SUBSYS_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace subsys {

/// Every failure the library reports. The category of a code decides the
/// CLI exit status (see `error_category`).
enum class ErrorCode {
    // Field construction and arithmetic.
    NonPrime,
    DegreeOutOfRange,
    NoModulusAvailable,
    DivisionByZero,
    // Shape mismatches.
    LengthMismatch,
    FieldMismatch,
    OddLength,
    TooShort,
    // Code-level preconditions.
    EmptyCode,
    ZeroCode,
    NotLinear,
    TrivialFactor,
    SizeTooSmall,
    PreconditionFailed,
    NonIntegerRHS,
    // Simulator.
    WireOutOfRange,
    SingularScale,
    NotStabilized,
    ProjectionVanished,
    // Resource caps.
    EnumerationTooLarge,
    StateTooLarge,
    // Input parsing.
    ParseError,
    // An internal consistency check failed. Always a bug.
    InternalInconsistency,
};

enum class ErrorCategory { Parse, Precondition, Resource, Internal };

ErrorCategory error_category(ErrorCode code);
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept { return code_; }
    ErrorCategory category() const noexcept { return error_category(code_); }

  private:
    ErrorCode code_;
};

}  // namespace subsys

#endif
