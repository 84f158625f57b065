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

#ifndef DDDEPTH_DATA_MATRIX_HPP
#define DDDEPTH_DATA_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ddd/error.hpp"

namespace ddd {

/// Dense n x d table of observations, row-major. Every entry is finite;
/// NaN and infinities are rejected at construction. Instances are
/// immutable after construction and safe to share across threads.
class DataMatrix {
 public:
  /// Takes ownership of `values`, which must hold rows*cols finite reals
  /// in row-major order.
  DataMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  /// Convenience constructor from a row list, e.g. {{0, 0}, {1, 0}}.
  DataMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::span<const double> row(std::size_t i) const {
    if (i >= rows_) throw ShapeError("row index " + std::to_string(i) + " out of range");
    return {values_.data() + i * cols_, cols_};
  }

  double operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }

  const std::vector<double>& values() const { return values_; }

  /// Column labels from CSV ingestion; empty when the source had none.
  const std::vector<std::string>& column_labels() const { return labels_; }
  void set_column_labels(std::vector<std::string> labels);

  /// New matrix holding this one's rows followed by `other`'s rows.
  DataMatrix concat_rows(const DataMatrix& other) const;

  /// New matrix holding the selected rows, in the given order. Indices may
  /// repeat (used by resampling).
  DataMatrix take_rows(std::span<const std::size_t> indices) const;

  bool operator==(const DataMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && values_ == other.values_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> values_;
  std::vector<std::string> labels_;
};

}  // namespace ddd

#endif  // DDDEPTH_DATA_MATRIX_HPP
