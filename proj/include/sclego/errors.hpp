// Copyright 2026 The sclego Authors
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

#ifndef SCLEGO_ERRORS_HPP
#define SCLEGO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sclego {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inadmissible input data (files, records, argument payloads).
// The CLI maps this to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration (weight schemes, scenario parameters, CLI config).
// The CLI maps this to exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Numeric failure at runtime (non-finite state, overflow, impossible value).
// The CLI maps this to exit code 3.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace sclego

#endif  // SCLEGO_ERRORS_HPP
