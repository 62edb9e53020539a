//
// Copyright 2026 The Infoseg Authors
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
//

#ifndef INFOSEG_ERRORS_H_
#define INFOSEG_ERRORS_H_

#include <stdexcept>
#include <string>

namespace infoseg {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input data or configuration violates a documented contract.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. `line()` is 1-based, or 0 when not line-oriented.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& message, int line = 0)
      : ValidationError(line > 0 ? "line " + std::to_string(line) + ": " + message
                                 : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// A measure cannot be evaluated on the given distributions.
class MeasureError : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed; indicates a bug rather than bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace infoseg

#endif  // INFOSEG_ERRORS_H_
