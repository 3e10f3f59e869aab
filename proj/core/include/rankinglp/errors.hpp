// Copyright 2026 The rankinglp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace rankinglp {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument did not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The LP backend failed in a way that is not a definitive solve status.
class BackendFailure : public Error {
 public:
  using Error::Error;
};

// Solution data violates feasibility beyond the repair tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// An exhaustive pass would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace rankinglp
