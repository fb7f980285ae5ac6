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

#ifndef FRIEZE_ERROR_HPP
#define FRIEZE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace frieze {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidModulus,
  kModulusMismatch,
  kNotAUnit,
  kModuliNotCoprime,
  kNotADivisor,
  kVertexNotInGraph,
  kInvalidParams,
  kLimitExceeded,
  kBadAnchor,
  kPreconditionViolated,
  kNotSemiclosed,
  kParse,
  kOutOfRange,
  // Failures that indicate a broken identity rather than bad input.
  kNoTransporter,
  kNonIntegerResult,
  kIo,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace frieze

#endif  // FRIEZE_ERROR_HPP
