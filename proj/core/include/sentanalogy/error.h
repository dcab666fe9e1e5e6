//
// Copyright 2026 The sentanalogy Authors
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

#ifndef SENTANALOGY_ERROR_H_
#define SENTANALOGY_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sentanalogy {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file or record. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A cosine was requested against a vector with zero L2 norm.
class ZeroNormError : public Error {
 public:
  using Error::Error;
};

// A token is missing from the word table under the `error` OOV policy.
class OovError : public Error {
 public:
  explicit OovError(const std::string& token);
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

// Every token of a sentence was dropped by the `skip-token` OOV policy.
class EmptySentenceError : public Error {
 public:
  using Error::Error;
};

// Lookup of an id that the table or question set does not contain.
class UnknownItemError : public Error {
 public:
  using Error::Error;
};

// Violated precondition or invariant in caller-supplied data.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace sentanalogy

#endif  // SENTANALOGY_ERROR_H_
