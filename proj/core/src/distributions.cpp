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

#include "ddd/distributions.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <utility>
#include <variant>

#include "ddd/error.hpp"

namespace ddd {

namespace {

Eigen::MatrixXd cholesky_or_throw(const Eigen::MatrixXd& scatter, const char* who) {
  if (scatter.rows() != scatter.cols()) {
    throw ParameterError(std::string(who) + ": scatter matrix must be square");
  }
  if (!scatter.isApprox(scatter.transpose(), 1e-12)) {
    throw ParameterError(std::string(who) + ": scatter matrix must be symmetric");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(scatter);
  if (llt.info() != Eigen::Success) {
    throw ParameterError(std::string(who) + ": scatter matrix must be positive definite");
  }
  return llt.matrixL();
}

void draw_standard_normal(Rng& rng, std::span<double> out) {
  for (double& v : out) v = rng.normal();
}

struct NormalParams {
  Eigen::VectorXd mean;
  Eigen::MatrixXd chol;  // lower factor of scatter
};

struct StudentTParams {
  Eigen::VectorXd mean;
  Eigen::MatrixXd chol;
  double dof;
};

struct LaplaceParams {
  std::size_t d;
};

struct SkewNormalParams {
  Eigen::Matrix<double, 4, 4> chol;  // augmented correlation [[1, delta^T], [delta, Omega]]
};

struct EmpiricalParams {
  DataMatrix rows;
};

}  // namespace

struct ReferenceDistribution::Impl {
  struct Mixture {
    std::vector<double> weights;
    std::vector<double> cumulative;
    std::vector<ReferenceDistribution> components;
    // Index of a weight that is exactly 1, or -1. Such mixtures delegate
    // straight to the component so the draw stream is unchanged.
    int sole_component = -1;
  };

  std::variant<NormalParams, StudentTParams, LaplaceParams, SkewNormalParams, Mixture,
               EmpiricalParams>
      params;
  std::size_t dimension = 0;
  std::string label;
};

namespace {

void draw_one(const ReferenceDistribution::Impl& impl, Rng& rng, std::span<double> out);

void draw_normal(const NormalParams& p, Rng& rng, std::span<double> out) {
  const auto d = p.mean.size();
  Eigen::VectorXd g(d);
  draw_standard_normal(rng, {g.data(), static_cast<std::size_t>(d)});
  Eigen::VectorXd x = p.mean + p.chol * g;
  for (Eigen::Index j = 0; j < d; ++j) out[static_cast<std::size_t>(j)] = x(j);
}

void draw_student_t(const StudentTParams& p, Rng& rng, std::span<double> out) {
  const auto d = p.mean.size();
  Eigen::VectorXd g(d);
  draw_standard_normal(rng, {g.data(), static_cast<std::size_t>(d)});
  double w = rng.chi_squared(p.dof) / p.dof;
  Eigen::VectorXd x = p.mean + (p.chol * g) / std::sqrt(w);
  for (Eigen::Index j = 0; j < d; ++j) out[static_cast<std::size_t>(j)] = x(j);
}

void draw_laplace(const LaplaceParams& p, Rng& rng, std::span<double> out) {
  // Direction uniform on the sphere, radius Gamma(d, 1): this is the
  // density proportional to exp(-||x||).
  double norm2;
  do {
    draw_standard_normal(rng, out);
    norm2 = 0.0;
    for (double v : out) norm2 += v * v;
  } while (norm2 < 1e-300);
  double r = rng.gamma(static_cast<double>(p.d), 1.0) / std::sqrt(norm2);
  for (double& v : out) v *= r;
}

void draw_skew_normal(const SkewNormalParams& p, Rng& rng, std::span<double> out) {
  // Selection representation: (Z0, Z) jointly normal with corr(Z0, Z) =
  // delta; emit Z when Z0 > 0, else -Z.
  Eigen::Vector4d g;
  draw_standard_normal(rng, {g.data(), 4});
  Eigen::Vector4d z = p.chol * g;
  double sign = z(0) > 0.0 ? 1.0 : -1.0;
  for (std::size_t j = 0; j < 3; ++j) out[j] = sign * z(j + 1);
}

void draw_empirical(const EmpiricalParams& p, Rng& rng, std::span<double> out) {
  std::size_t i = rng.uniform_index(p.rows.rows());
  auto row = p.rows.row(i);
  for (std::size_t j = 0; j < row.size(); ++j) out[j] = row[j];
}

void draw_one(const ReferenceDistribution::Impl& impl, Rng& rng, std::span<double> out) {
  if (const auto* m = std::get_if<ReferenceDistribution::Impl::Mixture>(&impl.params)) {
    if (m->sole_component >= 0) {
      m->components[static_cast<std::size_t>(m->sole_component)].draw(rng, out);
      return;
    }
    double u = rng.uniform();
    std::size_t k = 0;
    while (k + 1 < m->cumulative.size() && u >= m->cumulative[k]) ++k;
    m->components[k].draw(rng, out);
    return;
  }
  if (const auto* n = std::get_if<NormalParams>(&impl.params)) return draw_normal(*n, rng, out);
  if (const auto* t = std::get_if<StudentTParams>(&impl.params))
    return draw_student_t(*t, rng, out);
  if (const auto* l = std::get_if<LaplaceParams>(&impl.params)) return draw_laplace(*l, rng, out);
  if (const auto* s = std::get_if<SkewNormalParams>(&impl.params))
    return draw_skew_normal(*s, rng, out);
  if (const auto* e = std::get_if<EmpiricalParams>(&impl.params))
    return draw_empirical(*e, rng, out);
  throw Error("unhandled distribution variant");
}

}  // namespace

ReferenceDistribution::ReferenceDistribution(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

ReferenceDistribution ReferenceDistribution::normal(Eigen::VectorXd mean,
                                                    Eigen::MatrixXd scatter) {
  if (mean.size() != scatter.rows()) {
    throw ParameterError("normal: mean and scatter dimensions differ");
  }
  auto impl = std::make_shared<Impl>();
  impl->dimension = static_cast<std::size_t>(mean.size());
  impl->label = "normal";
  impl->params = NormalParams{std::move(mean), cholesky_or_throw(scatter, "normal")};
  return ReferenceDistribution(std::move(impl));
}

ReferenceDistribution ReferenceDistribution::standard_normal(std::size_t d) {
  if (d == 0) throw ParameterError("standard_normal: dimension must be positive");
  return normal(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d)),
                Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(d),
                                          static_cast<Eigen::Index>(d)));
}

ReferenceDistribution ReferenceDistribution::student_t(Eigen::VectorXd mean,
                                                       Eigen::MatrixXd scatter, double dof) {
  if (!(dof > 0.0)) throw ParameterError("student_t: dof must be positive");
  if (mean.size() != scatter.rows()) {
    throw ParameterError("student_t: mean and scatter dimensions differ");
  }
  auto impl = std::make_shared<Impl>();
  impl->dimension = static_cast<std::size_t>(mean.size());
  impl->label = dof == 1.0 ? "cauchy" : "student_t";
  impl->params = StudentTParams{std::move(mean), cholesky_or_throw(scatter, "student_t"), dof};
  return ReferenceDistribution(std::move(impl));
}

ReferenceDistribution ReferenceDistribution::cauchy(Eigen::VectorXd mean,
                                                    Eigen::MatrixXd scatter) {
  return student_t(std::move(mean), std::move(scatter), 1.0);
}

ReferenceDistribution ReferenceDistribution::standard_laplace(std::size_t d) {
  if (d == 0) throw ParameterError("standard_laplace: dimension must be positive");
  auto impl = std::make_shared<Impl>();
  impl->dimension = d;
  impl->label = "laplace";
  impl->params = LaplaceParams{d};
  return ReferenceDistribution(std::move(impl));
}

SkewNormalCanonical skew_normal_canonical(const Eigen::Vector3d& lambda,
                                          const Eigen::Matrix3d& psi) {
  for (int i = 0; i < 3; ++i) {
    if (!(std::abs(lambda(i)) < 1.0)) {
      throw ParameterError("skew_normal: each lambda must satisfy |lambda| < 1");
    }
  }
  if (!psi.isApprox(psi.transpose(), 1e-12)) {
    throw ParameterError("skew_normal: Psi must be symmetric");
  }
  for (int i = 0; i < 3; ++i) {
    if (std::abs(psi(i, i) - 1.0) > 1e-12) {
      throw ParameterError("skew_normal: Psi must have unit diagonal");
    }
  }
  Eigen::LLT<Eigen::Matrix3d> psi_llt(psi);
  if (psi_llt.info() != Eigen::Success) {
    throw ParameterError("skew_normal: Psi must be positive definite");
  }

  Eigen::Vector3d delta_diag, l;
  for (int i = 0; i < 3; ++i) {
    delta_diag(i) = std::sqrt(1.0 - lambda(i) * lambda(i));
    l(i) = lambda(i) / delta_diag(i);
  }
  Eigen::Matrix3d big_delta = delta_diag.asDiagonal();
  Eigen::Matrix3d omega = big_delta * (psi + l * l.transpose()) * big_delta;

  Eigen::Vector3d psi_inv_l = psi_llt.solve(l);
  double denom = std::sqrt(1.0 + l.dot(psi_inv_l));
  Eigen::Vector3d alpha = big_delta.inverse() * psi_inv_l / denom;
  return SkewNormalCanonical{alpha, omega};
}

ReferenceDistribution ReferenceDistribution::skew_normal(const Eigen::Vector3d& lambda,
                                                         const Eigen::Matrix3d& psi) {
  SkewNormalCanonical canon = skew_normal_canonical(lambda, psi);
  Eigen::Vector3d delta =
      canon.omega * canon.alpha / std::sqrt(1.0 + canon.alpha.dot(canon.omega * canon.alpha));
  Eigen::Matrix4d augmented;
  augmented(0, 0) = 1.0;
  augmented.block<1, 3>(0, 1) = delta.transpose();
  augmented.block<3, 1>(1, 0) = delta;
  augmented.block<3, 3>(1, 1) = canon.omega;
  Eigen::LLT<Eigen::Matrix4d> llt(augmented);
  if (llt.info() != Eigen::Success) {
    throw ParameterError("skew_normal: augmented correlation is not positive definite");
  }
  auto impl = std::make_shared<Impl>();
  impl->dimension = 3;
  impl->label = "skew_normal";
  impl->params = SkewNormalParams{Eigen::Matrix4d(llt.matrixL())};
  return ReferenceDistribution(std::move(impl));
}

ReferenceDistribution ReferenceDistribution::mixture(
    std::vector<double> weights, std::vector<ReferenceDistribution> components) {
  if (weights.empty() || weights.size() != components.size()) {
    throw ParameterError("mixture: need matching, non-empty weights and components");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw ParameterError("mixture: weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ParameterError("mixture: weights must sum to 1, got " + std::to_string(total));
  }
  std::size_t d = components.front().dimension();
  for (const auto& c : components) {
    if (c.dimension() != d) throw ParameterError("mixture: component dimensions differ");
  }

  Impl::Mixture m;
  m.weights = weights;
  m.cumulative.resize(weights.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    acc += weights[k];
    m.cumulative[k] = acc;
    if (weights[k] == 1.0) m.sole_component = static_cast<int>(k);
  }
  m.cumulative.back() = 1.0;
  m.components = std::move(components);

  auto impl = std::make_shared<Impl>();
  impl->dimension = d;
  impl->label = "mixture";
  impl->params = std::move(m);
  return ReferenceDistribution(std::move(impl));
}

ReferenceDistribution ReferenceDistribution::empirical(DataMatrix rows) {
  auto impl = std::make_shared<Impl>();
  impl->dimension = rows.cols();
  impl->label = "empirical";
  impl->params = EmpiricalParams{std::move(rows)};
  return ReferenceDistribution(std::move(impl));
}

std::size_t ReferenceDistribution::dimension() const { return impl_->dimension; }

const std::string& ReferenceDistribution::label() const { return impl_->label; }

const DataMatrix* ReferenceDistribution::empirical_rows() const {
  if (const auto* e = std::get_if<EmpiricalParams>(&impl_->params)) return &e->rows;
  return nullptr;
}

std::vector<double> ReferenceDistribution::mixture_weights() const {
  if (const auto* m = std::get_if<Impl::Mixture>(&impl_->params)) return m->weights;
  return {};
}

void ReferenceDistribution::draw(Rng& rng, std::span<double> out) const {
  if (out.size() != impl_->dimension) throw ShapeError("draw: output span has wrong size");
  draw_one(*impl_, rng, out);
}

DataMatrix ReferenceDistribution::sample(std::size_t n, Rng& rng) const {
  if (n == 0) throw ParameterError("sample: need n >= 1");
  const std::size_t d = impl_->dimension;
  std::vector<double> values(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    draw(rng, {values.data() + i * d, d});
  }
  return DataMatrix(n, d, std::move(values));
}

DirectionSet sample_unit_sphere(std::size_t d, std::size_t count, Rng& rng) {
  if (d == 0 || count == 0) throw ParameterError("sample_unit_sphere: need d >= 1, count >= 1");
  DirectionSet dirs{count, d, std::vector<double>(count * d)};
  for (std::size_t i = 0; i < count; ++i) {
    std::span<double> row{dirs.values.data() + i * d, d};
    double norm2;
    do {
      draw_standard_normal(rng, row);
      norm2 = 0.0;
      for (double v : row) norm2 += v * v;
    } while (norm2 < 1e-300);
    double inv = 1.0 / std::sqrt(norm2);
    for (double& v : row) v *= inv;
  }
  return dirs;
}

ReferenceDistribution contiguous_mixture(const ReferenceDistribution& f0,
                                         const ReferenceDistribution& h, double gamma,
                                         std::size_t n_total) {
  if (!(gamma >= 0.0)) throw ParameterError("contiguous_mixture: gamma must be >= 0");
  if (n_total == 0) throw ParameterError("contiguous_mixture: n_total must be positive");
  if (f0.dimension() != h.dimension()) {
    throw ParameterError("contiguous_mixture: component dimensions differ");
  }
  double eps = gamma / std::sqrt(static_cast<double>(n_total));
  if (eps > 1.0) {
    throw ParameterError("contiguous_mixture: gamma/sqrt(n) = " + std::to_string(eps) +
                         " exceeds 1");
  }
  return ReferenceDistribution::mixture({1.0 - eps, eps}, {f0, h});
}

}  // namespace ddd
