// Copyright 2026 The dddepth authors.
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

#ifndef DDDEPTH_ERROR_HPP
#define DDDEPTH_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ddd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension or size mismatch between two inputs.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An estimator was asked for more than the sample can support (e.g. a
/// covariance from a single observation).
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// The sample scatter matrix is singular or indefinite and cannot be
/// inverted for whitening. Carries the smallest eigenvalue found.
class NonInvertibleScatterError : public Error {
 public:
  NonInvertibleScatterError(const std::string& what, double smallest_eigenvalue)
      : Error(what), smallest_eigenvalue_(smallest_eigenvalue) {}
  double smallest_eigenvalue() const { return smallest_eigenvalue_; }

 private:
  double smallest_eigenvalue_;
};

/// Invalid distribution, mixture, or experiment parameter.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An exact algorithm was requested for a dimension it does not support.
class UnsupportedDimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Line and column are 1-based; column 0 means the
/// error applies to the whole line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ddd

#endif  // DDDEPTH_ERROR_HPP
