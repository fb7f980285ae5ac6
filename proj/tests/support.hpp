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

#ifndef FRIEZE_TESTS_SUPPORT_HPP
#define FRIEZE_TESTS_SUPPORT_HPP

#include <doctest.h>

#include <functional>

#include "frieze/error.hpp"

// Runs fn and returns the code of the frieze::Error it throws; fails the
// test when it returns normally.
inline frieze::ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const frieze::Error& e) {
    return e.code();
  }
  FAIL("expected a frieze::Error");
  return frieze::ErrorCode::kIo;
}

#endif  // FRIEZE_TESTS_SUPPORT_HPP
