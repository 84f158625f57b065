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

#ifndef DDDEPTH_DISTRIBUTIONS_HPP
#define DDDEPTH_DISTRIBUTIONS_HPP

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "ddd/data_matrix.hpp"
#include "ddd/rng.hpp"

namespace ddd {

/// M unit vectors in R^d, row-major. Norms are 1 within 1e-12.
struct DirectionSet {
  std::size_t count;
  std::size_t dimension;
  std::vector<double> values;

  std::span<const double> row(std::size_t i) const {
    return {values.data() + i * dimension, dimension};
  }
};

/// Canonical parameters (alpha, Omega) of the trivariate skew-normal with
/// density 2 phi_3(x; Omega) Phi(alpha^T x), derived from marginal skewness
/// scalars lambda (each in (-1,1)) and correlation matrix Psi:
///   Delta    = diag(sqrt(1 - lambda_i^2))
///   l_i      = lambda_i / sqrt(1 - lambda_i^2)
///   Omega    = Delta (Psi + l l^T) Delta          (unit diagonal)
///   alpha^T  = l^T Psi^-1 Delta^-1 / sqrt(1 + l^T Psi^-1 l)
struct SkewNormalCanonical {
  Eigen::Vector3d alpha;
  Eigen::Matrix3d omega;
};

SkewNormalCanonical skew_normal_canonical(const Eigen::Vector3d& lambda,
                                          const Eigen::Matrix3d& psi);

/// A samplable reference distribution: the null of a goodness-of-fit test,
/// a simulation alternative, a mixture component, or an empirical
/// resampling distribution. Parameters are validated at construction;
/// sampling never fails on a valid instance.
class ReferenceDistribution {
 public:
  static ReferenceDistribution normal(Eigen::VectorXd mean, Eigen::MatrixXd scatter);
  static ReferenceDistribution standard_normal(std::size_t d);
  static ReferenceDistribution student_t(Eigen::VectorXd mean, Eigen::MatrixXd scatter,
                                         double dof);
  /// Alias of student_t with dof 1; sampling is bit-identical to it.
  static ReferenceDistribution cauchy(Eigen::VectorXd mean, Eigen::MatrixXd scatter);
  /// Spherically symmetric density proportional to exp(-||x||); the radius
  /// is Gamma(d, 1) and the direction uniform on the sphere.
  static ReferenceDistribution standard_laplace(std::size_t d);
  static ReferenceDistribution skew_normal(const Eigen::Vector3d& lambda,
                                           const Eigen::Matrix3d& psi);
  static ReferenceDistribution mixture(std::vector<double> weights,
                                       std::vector<ReferenceDistribution> components);
  static ReferenceDistribution empirical(DataMatrix rows);

  std::size_t dimension() const;

  /// n i.i.d. rows. Row i consumes the generator in a fixed documented
  /// order, so the same (seed, stream) always yields the same matrix.
  DataMatrix sample(std::size_t n, Rng& rng) const;

  /// Draws a single observation into `out` (size d), consuming rng.
  void draw(Rng& rng, std::span<double> out) const;

  /// The stored rows when this is an empirical distribution, else nullptr.
  const DataMatrix* empirical_rows() const;

  /// Mixture weights when this is a mixture, else empty.
  std::vector<double> mixture_weights() const;

  /// Human-readable tag for result documents ("normal", "mixture", ...).
  const std::string& label() const;

  struct Impl;

 private:
  explicit ReferenceDistribution(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/// M points uniform on the unit sphere boundary in R^d (normalized
/// Gaussians). For d = 1 the entries are +1 or -1.
DirectionSet sample_unit_sphere(std::size_t d, std::size_t count, Rng& rng);

/// The local-alternative mixture (1 - gamma/sqrt(n_total)) f0 +
/// (gamma/sqrt(n_total)) h. Requires 0 <= gamma/sqrt(n_total) <= 1.
ReferenceDistribution contiguous_mixture(const ReferenceDistribution& f0,
                                         const ReferenceDistribution& h, double gamma,
                                         std::size_t n_total);

}  // namespace ddd

#endif  // DDDEPTH_DISTRIBUTIONS_HPP
