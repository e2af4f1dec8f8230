// Copyright 2026 The RDASS Authors.
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

#ifndef RDASS_ERROR_HPP_
#define RDASS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace rdass {

// Base of every error raised by the library. The CLI maps all of these to
// exit code 1; usage errors are detected before any of this code runs.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated an operation's precondition (bad n, empty list, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Input is well-formed but mathematically degenerate: zero-norm vectors,
// constant series, coincident points on an active hinge.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// Unusable configuration such as an unreadable vocabulary or vector store.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A key was not present in a precomputed vector store.
class LookupError : public Error {
 public:
  explicit LookupError(const std::string& key)
      : Error("embedding key not found: \"" + key + "\""), key_(key) {}

  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

// Transport or protocol failure talking to an embedding service.
class BackendError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. Line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  size_t line() const { return line_; }

 private:
  size_t line_;
};

// Well-formed input that breaks a data-model invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace rdass

#endif  // RDASS_ERROR_HPP_
