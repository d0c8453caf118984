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

#include "subsys/error.h"

namespace subsys {

ErrorCategory error_category(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError:
            return ErrorCategory::Parse;
        case ErrorCode::EnumerationTooLarge:
        case ErrorCode::StateTooLarge:
            return ErrorCategory::Resource;
        case ErrorCode::InternalInconsistency:
            return ErrorCategory::Internal;
        default:
            return ErrorCategory::Precondition;
    }
}

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonPrime: return "NonPrime";
        case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
        case ErrorCode::NoModulusAvailable: return "NoModulusAvailable";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::OddLength: return "OddLength";
        case ErrorCode::TooShort: return "TooShort";
        case ErrorCode::EmptyCode: return "EmptyCode";
        case ErrorCode::ZeroCode: return "ZeroCode";
        case ErrorCode::NotLinear: return "NotLinear";
        case ErrorCode::TrivialFactor: return "TrivialFactor";
        case ErrorCode::SizeTooSmall: return "SizeTooSmall";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::NonIntegerRHS: return "NonIntegerRHS";
        case ErrorCode::WireOutOfRange: return "WireOutOfRange";
        case ErrorCode::SingularScale: return "SingularScale";
        case ErrorCode::NotStabilized: return "NotStabilized";
        case ErrorCode::ProjectionVanished: return "ProjectionVanished";
        case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
        case ErrorCode::StateTooLarge: return "StateTooLarge";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace subsys
