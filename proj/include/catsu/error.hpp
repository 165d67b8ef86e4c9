/*
 * Copyright 2026 The catsu Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace catsu {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch: wrong column length, partitions over different row sets.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Unknown column name.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Malformed CSV input. `line()` is the 1-based physical line of the record.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input had no data rows.
class EmptyDatasetError : public Error {
 public:
  using Error::Error;
};

/// Two columns share a name.
class NameCollisionError : public Error {
 public:
  using Error::Error;
};

/// H(X) + H(Y) = 0, so the entropic ratio has no value.
class UndefinedRatioError : public Error {
 public:
  using Error::Error;
};

/// Invalid generator or validator configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace catsu
