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

#include "ddd/depth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "ddd/error.hpp"
#include "ddd/parallel.hpp"

namespace ddd {

namespace {

// ---------------------------------------------------------------------------
// Exact planar sign predicates.
//
// det2 returns a*d - b*c with one FMA correction (Kahan). The relative error
// is below 2 ulp, so the SIGN is always exact, including the zero case: when
// a*d == b*c the two correction terms cancel exactly. Every tie decision in
// the planar engines goes through these, which is what makes the sweep and
// the enumeration agree bit-for-bit on collinear and duplicated inputs.
// ---------------------------------------------------------------------------

inline double det2(double a, double b, double c, double d) {
  double w = b * c;
  double e = std::fma(-b, c, w);  // w - b*c, exact
  double f = std::fma(a, d, -w);  // a*d - w, exact
  return f + e;
}

// cross(a, b) > 0 iff b is counterclockwise of a (within a half turn).
inline double cross2(double ax, double ay, double bx, double by) {
  return det2(ax, ay, bx, by);
}

inline double dot2(double ax, double ay, double bx, double by) {
  return det2(ax, -ay, by, bx);
}

// Monotone surrogate of the direction angle, in [0, 4): the "diamond"
// pseudo-angle, 0 at the positive x axis, increasing counterclockwise.
// Cheap (one division), and exactly equal for exactly proportional vectors;
// near-ties are settled by the cross2 predicate, never by this key.
inline double diamond_key(double x, double y) {
  double s = std::fabs(x) + std::fabs(y);
  if (y >= 0.0) {
    if (x > 0.0) return y / s;        // [0, 1)
    if (y > 0.0) return 1.0 - x / s;  // [1, 2)
    return 2.0;                       // direction (-1, 0)
  }
  if (x < 0.0) return 2.0 - y / s;  // (2, 3)
  return 3.0 + x / s;               // [3, 4)
}

struct DirNode {
  double key;
  std::uint32_t idx;
};

// Orders direction nodes by true angle: key first, exact cross sign on key
// collisions. `vx`/`vy` hold the vector components per node index.
struct AngleLess {
  const double* vx;
  const double* vy;
  bool operator()(const DirNode& a, const DirNode& b) const {
    if (a.key != b.key) return a.key < b.key;
    return cross2(vx[a.idx], vy[a.idx], vx[b.idx], vy[b.idx]) > 0.0;
  }
};

struct SweepScratch {
  std::vector<double> vx, vy;
  std::vector<DirNode> nodes;
  std::vector<DirNode> sorted;
  std::vector<std::uint32_t> bucket_start;
  std::vector<std::int32_t> group_of;
  std::vector<std::int64_t> group_count;  // original offsets per angle group
  std::vector<std::int64_t> prefix;
  std::vector<std::int32_t> antipode;
};

thread_local SweepScratch t_sweep;

// Sorts direction nodes into exact angular order: a counting sort over
// angular buckets (the key is monotone in the angle, so bucket index
// floor(key * buckets / 4) is too), then insertion sort inside each
// bucket, exact predicate settling key ties. Beats std::sort here because
// buckets hold only a handful of nodes.
void angular_sort(SweepScratch& s) {
  const std::size_t count = s.nodes.size();
  std::size_t buckets = 64;
  while (buckets < count && buckets < 4096) buckets *= 2;
  const double scale = static_cast<double>(buckets) / 4.0;

  s.bucket_start.assign(buckets + 1, 0);
  for (const DirNode& nd : s.nodes) {
    auto b = static_cast<std::size_t>(nd.key * scale);
    if (b >= buckets) b = buckets - 1;
    ++s.bucket_start[b + 1];
  }
  for (std::size_t b = 0; b < buckets; ++b) s.bucket_start[b + 1] += s.bucket_start[b];

  s.sorted.resize(count);
  {
    // scatter using the running starts; restore them afterwards
    std::vector<std::uint32_t>& pos = s.bucket_start;
    for (const DirNode& nd : s.nodes) {
      auto b = static_cast<std::size_t>(nd.key * scale);
      if (b >= buckets) b = buckets - 1;
      s.sorted[pos[b]++] = nd;
    }
    for (std::size_t b = buckets; b > 0; --b) pos[b] = pos[b - 1];
    pos[0] = 0;
  }

  AngleLess less{s.vx.data(), s.vy.data()};
  for (std::size_t b = 0; b < buckets; ++b) {
    std::uint32_t lo = s.bucket_start[b], hi = s.bucket_start[b + 1];
    for (std::uint32_t i = lo + 1; i < hi; ++i) {
      DirNode key_node = s.sorted[i];
      std::uint32_t j = i;
      while (j > lo && less(key_node, s.sorted[j - 1])) {
        s.sorted[j] = s.sorted[j - 1];
        --j;
      }
      s.sorted[j] = key_node;
    }
  }
  s.nodes.swap(s.sorted);
}

void require_2d(const DataMatrix& sample, std::span<const double> x) {
  if (sample.cols() != 2) throw ShapeError("planar depth requires d = 2 sample");
  if (x.size() != 2) throw ShapeError("planar depth requires a 2-vector query");
}

}  // namespace

double depth_univariate(const DataMatrix& sample, double x) {
  if (sample.cols() != 1) throw ShapeError("depth_univariate requires d = 1 sample");
  std::size_t le = 0, ge = 0;
  for (std::size_t i = 0; i < sample.rows(); ++i) {
    double v = sample(i, 0);
    if (v <= x) ++le;
    if (v >= x) ++ge;
  }
  return static_cast<double>(std::min(le, ge)) / static_cast<double>(sample.rows());
}

double depth_sweep_2d(const DataMatrix& sample, std::span<const double> x) {
  require_2d(sample, x);
  const std::size_t n = sample.rows();
  auto& s = t_sweep;

  // Offsets X_i - x. Points sitting exactly on x lie in every closed
  // half-plane; count them separately. Nodes 0..m-1 are offset
  // directions, m..2m-1 their negations; one division serves both keys.
  s.vx.resize(2 * n);
  s.vy.resize(2 * n);
  s.nodes.resize(2 * n);
  std::size_t zeros = 0;
  std::size_t m = 0;
  const double* values = sample.values().data();
  for (std::size_t i = 0; i < n; ++i) {
    double ox = values[2 * i] - x[0];
    double oy = values[2 * i + 1] - x[1];
    if (ox == 0.0 && oy == 0.0) {
      ++zeros;
      continue;
    }
    s.vx[m] = ox;
    s.vy[m] = oy;
    s.nodes[m] = DirNode{diamond_key(ox, oy), static_cast<std::uint32_t>(m)};
    m++;
  }
  if (m == 0) return 1.0;
  // Negation keys are recomputed from the negated components rather than
  // shifted by 2: adding 2 to a rounded sum can double-round, and these
  // keys must match directly computed ones bit for bit.
  for (std::size_t j = 0; j < m; ++j) {
    double nx = -s.vx[j], ny = -s.vy[j];
    s.vx[m + j] = nx;
    s.vy[m + j] = ny;
    s.nodes[m + j] = DirNode{diamond_key(nx, ny), static_cast<std::uint32_t>(m + j)};
  }
  s.vx.resize(2 * m);
  s.vy.resize(2 * m);
  s.nodes.resize(2 * m);

  // Writing the arc count for a boundary direction at angle psi as
  //   N(psi) = #{ offsets with angle in (psi, psi + pi] },
  // the depth is (zeros + min over node angles psi of N(psi)) / n: the
  // count function over boundary directions is upper semicontinuous, so
  // its minimum sits on the open arcs between event angles, and N(psi)
  // evaluates exactly that arc value for the arc that starts at psi.
  //
  angular_sort(s);

  // Coalesce equal directions into angle groups; per group, count how many
  // original offsets point that way.
  s.group_of.resize(2 * m);
  s.group_count.clear();
  std::uint32_t rep = 0;
  for (std::size_t pos = 0; pos < s.nodes.size(); ++pos) {
    const DirNode& nd = s.nodes[pos];
    bool new_group =
        pos == 0 || s.nodes[pos - 1].key != nd.key ||
        cross2(s.vx[rep], s.vy[rep], s.vx[nd.idx], s.vy[nd.idx]) != 0.0;
    if (new_group) {
      s.group_count.push_back(0);
      rep = nd.idx;
    }
    s.group_of[nd.idx] = static_cast<std::int32_t>(s.group_count.size() - 1);
    if (nd.idx < m) ++s.group_count.back();
  }
  const std::size_t k = s.group_count.size();

  // A node and its negation are created as a pair, which pins down the
  // group exactly opposite each group.
  s.antipode.assign(k, 0);
  for (std::size_t j = 0; j < m; ++j) {
    s.antipode[static_cast<std::size_t>(s.group_of[j])] = s.group_of[j + m];
    s.antipode[static_cast<std::size_t>(s.group_of[j + m])] = s.group_of[j];
  }

  s.prefix.assign(k + 1, 0);
  for (std::size_t g = 0; g < k; ++g) s.prefix[g + 1] = s.prefix[g] + s.group_count[g];
  const std::int64_t total = s.prefix[k];

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::size_t g = 0; g < k; ++g) {
    std::size_t a = g + 1 == k ? 0 : g + 1;
    std::size_t b = static_cast<std::size_t>(s.antipode[g]);
    std::int64_t cnt;
    if (a <= b) {
      cnt = s.prefix[b + 1] - s.prefix[a];
    } else {
      cnt = (total - s.prefix[a]) + s.prefix[b + 1];
    }
    best = std::min(best, cnt);
  }
  return (static_cast<double>(zeros) + static_cast<double>(best)) / static_cast<double>(n);
}

double depth_exact_2d(const DataMatrix& sample, std::span<const double> x) {
  require_2d(sample, x);
  const std::size_t n = sample.rows();

  std::vector<double> ox, oy;
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = sample(i, 0) - x[0];
    double dy = sample(i, 1) - x[1];
    if (dx == 0.0 && dy == 0.0) {
      ++zeros;
    } else {
      ox.push_back(dx);
      oy.push_back(dy);
    }
  }
  const std::size_t m = ox.size();
  if (m == 0) return 1.0;

  auto halfplane_count = [&](double ux, double uy) {
    std::size_t cnt = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (dot2(ux, uy, ox[j], oy[j]) <= 0.0) ++cnt;
    }
    return cnt;
  };

  // Candidate boundary normals: both directions perpendicular to each
  // offset. The direction-count function is constant between consecutive
  // candidates, so candidates plus one interior direction per gap cover
  // every value it takes.
  std::vector<double> cx, cy;
  cx.reserve(2 * m);
  cy.reserve(2 * m);
  for (std::size_t j = 0; j < m; ++j) {
    cx.push_back(-oy[j]);
    cy.push_back(ox[j]);
    cx.push_back(oy[j]);
    cy.push_back(-ox[j]);
  }
  std::vector<DirNode> nodes(2 * m);
  for (std::size_t j = 0; j < 2 * m; ++j) {
    nodes[j] = DirNode{diamond_key(cx[j], cy[j]), static_cast<std::uint32_t>(j)};
  }
  AngleLess less{cx.data(), cy.data()};
  std::sort(nodes.begin(), nodes.end(), less);

  std::vector<double> dx, dy;  // deduplicated candidate directions, in angular order
  for (std::size_t pos = 0; pos < nodes.size(); ++pos) {
    const DirNode& nd = nodes[pos];
    bool distinct = dx.empty() || nodes[pos - 1].key != nd.key ||
                    cross2(dx.back(), dy.back(), cx[nd.idx], cy[nd.idx]) != 0.0;
    if (distinct) {
      dx.push_back(cx[nd.idx]);
      dy.push_back(cy[nd.idx]);
    }
  }
  const std::size_t kc = dx.size();

  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < kc; ++i) {
    best = std::min(best, halfplane_count(dx[i], dy[i]));
  }

  if (kc == 2) {
    // All candidates on one line; the two open arcs are half circles and
    // the perpendicular hits each one.
    best = std::min(best, halfplane_count(-dy[0], dx[0]));
    best = std::min(best, halfplane_count(dy[0], -dx[0]));
  } else {
    for (std::size_t i = 0; i < kc; ++i) {
      std::size_t next = i + 1 == kc ? 0 : i + 1;
      double ha = std::hypot(dx[i], dy[i]);
      double hb = std::hypot(dx[next], dy[next]);
      double mx = dx[i] / ha + dx[next] / hb;
      double my = dy[i] / ha + dy[next] / hb;
      best = std::min(best, halfplane_count(mx, my));
    }
  }
  return (static_cast<double>(zeros) + static_cast<double>(best)) / static_cast<double>(n);
}

double depth_approx(const DataMatrix& sample, std::span<const double> x,
                    const DirectionSet& dirs) {
  const std::size_t d = sample.cols();
  if (x.size() != d) throw ShapeError("query dimension does not match sample");
  if (dirs.count == 0) throw ShapeError("depth_approx requires a non-empty direction set");
  if (dirs.dimension != d) {
    throw ShapeError("direction set dimension " + std::to_string(dirs.dimension) +
                     " does not match data dimension " + std::to_string(d));
  }
  const std::size_t n = sample.rows();
  std::size_t best = n;
  if (d == 2) {
    // Same exact predicate as the planar engines, so using their candidate
    // directions reproduces the exact value.
    for (std::size_t u = 0; u < dirs.count && best > 0; ++u) {
      auto dir = dirs.row(u);
      std::size_t cnt = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (dot2(dir[0], dir[1], sample(i, 0) - x[0], sample(i, 1) - x[1]) <= 0.0) ++cnt;
      }
      best = std::min(best, cnt);
    }
  } else {
    for (std::size_t u = 0; u < dirs.count && best > 0; ++u) {
      auto dir = dirs.row(u);
      std::size_t cnt = 0;
      for (std::size_t i = 0; i < n; ++i) {
        auto row = sample.row(i);
        double proj = 0.0;
        for (std::size_t j = 0; j < d; ++j) proj += dir[j] * (row[j] - x[j]);
        if (proj <= 0.0) ++cnt;
      }
      best = std::min(best, cnt);
    }
  }
  return static_cast<double>(best) / static_cast<double>(n);
}

double depth(const DataMatrix& sample, std::span<const double> x, const DepthConfig& config,
             Rng& rng) {
  DepthEvaluator eval(sample.cols(), config, rng);
  return eval.value(sample, x);
}

std::vector<double> depth_profile(const DataMatrix& sample, const DataMatrix& eval_points,
                                  const DepthConfig& config, Rng& rng) {
  if (eval_points.cols() != sample.cols()) {
    throw ShapeError("evaluation points dimension does not match sample");
  }
  DepthEvaluator eval(sample.cols(), config, rng);
  return eval.profile(sample, eval_points);
}

DepthEvaluator::DepthEvaluator(std::size_t dimension, const DepthConfig& config, Rng& rng)
    : dimension_(dimension), config_(config) {
  if (dimension_ == 0) throw ShapeError("dimension must be positive");
  switch (config_.method) {
    case DepthMethod::kExact:
      if (dimension_ > 2) {
        throw UnsupportedDimensionError("exact depth is implemented for d <= 2, got d = " +
                                        std::to_string(dimension_));
      }
      break;
    case DepthMethod::kAuto:
      if (dimension_ > 2) dirs_ = sample_unit_sphere(dimension_, config_.directions, rng);
      break;
    case DepthMethod::kApprox:
      if (config_.directions == 0) throw ParameterError("approx depth needs directions >= 1");
      dirs_ = sample_unit_sphere(dimension_, config_.directions, rng);
      break;
  }
}

double DepthEvaluator::value(const DataMatrix& sample, std::span<const double> x) const {
  if (sample.cols() != dimension_) throw ShapeError("sample dimension changed under evaluator");
  if (dirs_) return depth_approx(sample, x, *dirs_);
  if (dimension_ == 1) return depth_univariate(sample, x[0]);
  return depth_sweep_2d(sample, x);
}

std::vector<double> DepthEvaluator::profile(const DataMatrix& sample,
                                            const DataMatrix& eval_points) const {
  std::vector<double> out(eval_points.rows());
  parallel_for(eval_points.rows(),
               [&](std::size_t i) { out[i] = value(sample, eval_points.row(i)); });
  return out;
}

std::vector<double> DepthEvaluator::profile(const DataMatrix& sample,
                                            std::span<const double> points,
                                            std::size_t count) const {
  if (count * dimension_ != points.size()) {
    throw ShapeError("point buffer size does not match count x dimension");
  }
  std::vector<double> out(count);
  parallel_for(count, [&](std::size_t i) {
    out[i] = value(sample, points.subspan(i * dimension_, dimension_));
  });
  return out;
}

}  // namespace ddd
