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

#ifndef DDDEPTH_STANDARDIZE_HPP
#define DDDEPTH_STANDARDIZE_HPP

#include <Eigen/Dense>
#include <utility>

#include "ddd/data_matrix.hpp"

namespace ddd {

/// Location/scatter estimates together with the whitening transform
/// W = L^-1, where L is the lower Cholesky factor of the covariance.
/// W * covariance * W^T = I within 1e-8 per entry.
struct Standardization {
  Eigen::VectorXd mean;
  Eigen::MatrixXd covariance;
  Eigen::MatrixXd whitener;
};

/// Column means; entry j is the average of column j.
Eigen::VectorXd column_mean(const DataMatrix& x);

/// Unbiased sample covariance (divisor n-1). Exactly symmetric: the lower
/// triangle is computed and mirrored. Requires n >= 2.
Eigen::MatrixXd sample_covariance(const DataMatrix& x);

/// Centers and whitens the sample: row i of the output is W * (x_i - mean).
/// The output has sample mean zero and sample covariance I within 1e-8.
/// Throws NonInvertibleScatterError when the covariance is not positive
/// definite, reporting its smallest eigenvalue.
std::pair<DataMatrix, Standardization> standardize(const DataMatrix& x);

/// Applies an existing standardization to (possibly different) data.
DataMatrix apply_standardization(const DataMatrix& x, const Standardization& s);

}  // namespace ddd

#endif  // DDDEPTH_STANDARDIZE_HPP
