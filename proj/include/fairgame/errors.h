// Copyright 2026 The Fairgame Authors
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

#ifndef FAIRGAME_ERRORS_H_
#define FAIRGAME_ERRORS_H_

#include <stdexcept>
#include <string>

namespace fairgame {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: dimension mismatches, out-of-range indices, alpha
// outside [0, 1], and the like.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An operation was called on an input that violates its precondition, e.g.
// plain Shapley pay on an economy with nonzero surplus at the reference.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Full-game construction would exceed the configured Shapley term budget.
class SizeCapExceeded : public Error {
 public:
  using Error::Error;
};

// Economy documents that fail to parse or validate.
class DocumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace fairgame

#endif  // FAIRGAME_ERRORS_H_
