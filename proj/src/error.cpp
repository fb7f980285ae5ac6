// Copyright 2026 The Frieze Authors
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

#include "frieze/error.hpp"

namespace frieze {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidModulus: return "InvalidModulus";
    case ErrorCode::kModulusMismatch: return "ModulusMismatch";
    case ErrorCode::kNotAUnit: return "NotAUnit";
    case ErrorCode::kModuliNotCoprime: return "ModuliNotCoprime";
    case ErrorCode::kNotADivisor: return "NotADivisor";
    case ErrorCode::kVertexNotInGraph: return "VertexNotInGraph";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kLimitExceeded: return "LimitExceeded";
    case ErrorCode::kBadAnchor: return "BadAnchor";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kNotSemiclosed: return "NotSemiclosed";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kNoTransporter: return "NoTransporter";
    case ErrorCode::kNonIntegerResult: return "NonIntegerResult";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace frieze
