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

#include "ddd/data_matrix.hpp"

#include <cmath>
#include <utility>

namespace ddd {

DataMatrix::DataMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows_ == 0 || cols_ == 0) {
    throw ShapeError("data matrix must have at least one row and one column");
  }
  if (values_.size() != rows_ * cols_) {
    throw ShapeError("value buffer size " + std::to_string(values_.size()) +
                     " does not match " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k])) {
      throw ShapeError("non-finite entry at row " + std::to_string(k / cols_) +
                       ", column " + std::to_string(k % cols_));
    }
  }
}

DataMatrix::DataMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  values_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged initializer row");
    values_.insert(values_.end(), r.begin(), r.end());
  }
  *this = DataMatrix(rows_, cols_, std::move(values_));
}

void DataMatrix::set_column_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != cols_) {
    throw ShapeError("label count does not match column count");
  }
  labels_ = std::move(labels);
}

DataMatrix DataMatrix::concat_rows(const DataMatrix& other) const {
  if (other.cols_ != cols_) throw ShapeError("cannot concatenate matrices of different widths");
  std::vector<double> merged(values_);
  merged.insert(merged.end(), other.values_.begin(), other.values_.end());
  DataMatrix out(rows_ + other.rows_, cols_, std::move(merged));
  out.labels_ = labels_;
  return out;
}

DataMatrix DataMatrix::take_rows(std::span<const std::size_t> indices) const {
  std::vector<double> picked;
  picked.reserve(indices.size() * cols_);
  for (std::size_t i : indices) {
    if (i >= rows_) throw ShapeError("row index out of range in take_rows");
    picked.insert(picked.end(), values_.begin() + i * cols_, values_.begin() + (i + 1) * cols_);
  }
  DataMatrix out(indices.size(), cols_, std::move(picked));
  out.labels_ = labels_;
  return out;
}

}  // namespace ddd
