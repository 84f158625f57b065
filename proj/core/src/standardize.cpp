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

#include "ddd/standardize.hpp"

#include <Eigen/Cholesky>
#include <limits>
#include <Eigen/Eigenvalues>

#include "ddd/error.hpp"

namespace ddd {

namespace {

using RowMajorMap =
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

RowMajorMap as_eigen(const DataMatrix& x) {
  return RowMajorMap(x.values().data(), static_cast<Eigen::Index>(x.rows()),
                     static_cast<Eigen::Index>(x.cols()));
}

}  // namespace

Eigen::VectorXd column_mean(const DataMatrix& x) {
  return as_eigen(x).colwise().mean().transpose();
}

Eigen::MatrixXd sample_covariance(const DataMatrix& x) {
  const auto n = static_cast<Eigen::Index>(x.rows());
  const auto d = static_cast<Eigen::Index>(x.cols());
  if (n < 2) {
    throw InsufficientDataError("sample covariance needs at least 2 observations, got " +
                                std::to_string(x.rows()));
  }
  Eigen::MatrixXd centered = as_eigen(x).rowwise() - as_eigen(x).colwise().mean();
  Eigen::MatrixXd cov(d, d);
  // Fill the lower triangle, then mirror so the result is bitwise symmetric.
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = j; i < d; ++i) {
      double s = centered.col(i).dot(centered.col(j)) / static_cast<double>(n - 1);
      cov(i, j) = s;
      cov(j, i) = s;
    }
  }
  return cov;
}

std::pair<DataMatrix, Standardization> standardize(const DataMatrix& x) {
  Eigen::VectorXd mu = column_mean(x);
  Eigen::MatrixXd cov = sample_covariance(x);

  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  bool positive_definite = llt.info() == Eigen::Success;
  if (positive_definite) {
    // Rounding can leave an exactly singular matrix with a tiny positive
    // pivot; reject when the pivot ratio is at noise level.
    Eigen::VectorXd pivots = Eigen::MatrixXd(llt.matrixL()).diagonal();
    double lmin = pivots.minCoeff();
    double lmax = pivots.maxCoeff();
    double eps = std::numeric_limits<double>::epsilon();
    positive_definite =
        lmin > 0.0 && lmin * lmin > 16.0 * static_cast<double>(cov.rows()) * eps * lmax * lmax;
  }
  if (!positive_definite) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov, Eigen::EigenvaluesOnly);
    double smallest = es.eigenvalues().minCoeff();
    throw NonInvertibleScatterError(
        "sample covariance is not positive definite (smallest eigenvalue " +
            std::to_string(smallest) + ")",
        smallest);
  }

  Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(cov.rows(), cov.cols());
  Eigen::MatrixXd whitener =
      llt.matrixL().solve(identity);  // W = L^-1, so W cov W^T = I

  Standardization params{std::move(mu), std::move(cov), std::move(whitener)};

  const std::size_t n = x.rows(), d = x.cols();
  std::vector<double> out(n * d);
  Eigen::VectorXd row(d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) row(static_cast<Eigen::Index>(j)) = x(i, j);
    Eigen::VectorXd w = params.whitener * (row - params.mean);
    for (std::size_t j = 0; j < d; ++j) out[i * d + j] = w(static_cast<Eigen::Index>(j));
  }
  return {DataMatrix(n, d, std::move(out)), std::move(params)};
}

DataMatrix apply_standardization(const DataMatrix& x, const Standardization& s) {
  if (static_cast<Eigen::Index>(x.cols()) != s.mean.size()) {
    throw ShapeError("standardization dimension does not match data");
  }
  const std::size_t n = x.rows(), d = x.cols();
  std::vector<double> out(n * d);
  Eigen::VectorXd row(static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) row(static_cast<Eigen::Index>(j)) = x(i, j);
    Eigen::VectorXd w = s.whitener * (row - s.mean);
    for (std::size_t j = 0; j < d; ++j) out[i * d + j] = w(static_cast<Eigen::Index>(j));
  }
  return DataMatrix(n, d, std::move(out));
}

}  // namespace ddd
