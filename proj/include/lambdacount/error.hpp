// Copyright 2026 The lambdacount Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lambdacount {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition was violated (index out of range, p < 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A value whose contract is "count" turned out not to be an integer.
class IntegralityError : public Error {
 public:
  using Error::Error;
};

// Two independent computations of the same quantity disagree.
class RouteMismatch : public Error {
 public:
  RouteMismatch(std::string what, std::size_t first_index)
      : Error(what + " (first disagreement at index " +
              std::to_string(first_index) + ")"),
        first_index_(first_index) {}

  std::size_t first_index() const noexcept { return first_index_; }

 private:
  std::size_t first_index_;
};

class OracleCapExceeded : public Error {
 public:
  using Error::Error;
};

// delta_fast was requested but its recurrence failed validation.
class DeltaFastDisabled : public Error {
 public:
  using Error::Error;
};

class CacheError : public Error {
 public:
  using Error::Error;
};

}  // namespace lambdacount
