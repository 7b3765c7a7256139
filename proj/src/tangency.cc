// Copyright 2026 The tcenters Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tcenters/tangency.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace tcenters {

namespace {

// Distance the centers of a tangent pair must have according to the flags.
template <int N>
double ExpectedCenterDistance(const Sphere<N>& si, const Sphere<N>& sj) {
  if (si.containing() || sj.containing()) {
    return std::abs(si.radius() - sj.radius());
  }
  return si.radius() + sj.radius();
}

// True when the flags are a legal description of the pair: at most one
// containing sphere, and it is the larger one.
template <int N>
bool FlagsAdmissible(const Sphere<N>& si, const Sphere<N>& sj) {
  if (si.containing() && sj.containing()) return false;
  if (si.containing()) return si.radius() > sj.radius();
  if (sj.containing()) return sj.radius() > si.radius();
  return true;
}

template <int N>
Vec<N> BendWeightedPoint(const Sphere<N>& si, const Sphere<N>& sj,
                         double rel_tol) {
  const double ri = SignedBend(si);
  const double rj = SignedBend(sj);
  const double sum = ri + rj;
  if (!(std::abs(sum) >= rel_tol * (std::abs(ri) + std::abs(rj)))) {
    throw GeometryError(ErrorCode::kDegenerateBendSum,
                        "bends of a tangent pair cancel");
  }
  // Weighted average expressed as an offset from the first center.
  return si.center() + (rj / sum) * (sj.center() - si.center());
}

// Touching point computed from geometry alone, for either kind of contact.
template <int N>
Vec<N> GeometricContact(const Sphere<N>& si, const Sphere<N>& sj,
                        bool internal) {
  const Vec<N> delta = sj.center() - si.center();
  const double d = Norm(delta);
  if (!(d > 0.0)) {
    throw GeometryError(ErrorCode::kNotTangent, "concentric spheres");
  }
  if (!internal) return si.center() + (si.radius() / d) * delta;
  if (si.radius() >= sj.radius()) {
    return si.center() + (si.radius() / d) * delta;
  }
  return sj.center() - (sj.radius() / d) * delta;
}

}  // namespace

template <int N>
Sphere<N>::Sphere(const Vec<N>& center, double radius, Orientation orientation)
    : center_(center), radius_(radius), orientation_(orientation) {
  if (!(radius > 0.0) || !std::isfinite(radius) || !IsFinite(center)) {
    throw GeometryError(ErrorCode::kInvalidArgument,
                        "sphere needs a finite center and positive radius");
  }
}

template class Sphere<2>;
template class Sphere<3>;

template <int N>
RigidMotion<N> RigidMotion<N>::Random(std::uint64_t seed, double translation) {
  std::mt19937_64 rng(seed);
  RigidMotion m;
  if constexpr (N == 2) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const double t = angle(rng);
    const double c = std::cos(t), s = std::sin(t);
    m.rotation_ = {c, -s, s, c};
  } else {
    // Uniform random unit quaternion.
    std::normal_distribution<double> g;
    double w, x, y, z, n;
    do {
      w = g(rng);
      x = g(rng);
      y = g(rng);
      z = g(rng);
      n = std::sqrt(w * w + x * x + y * y + z * z);
    } while (n < 1e-6);
    w /= n;
    x /= n;
    y /= n;
    z /= n;
    m.rotation_ = {1 - 2 * (y * y + z * z), 2 * (x * y - z * w),
                   2 * (x * z + y * w),     2 * (x * y + z * w),
                   1 - 2 * (x * x + z * z), 2 * (y * z - x * w),
                   2 * (x * z - y * w),     2 * (y * z + x * w),
                   1 - 2 * (x * x + y * y)};
  }
  std::uniform_real_distribution<double> shift(-translation, translation);
  for (int i = 0; i < N; ++i) m.offset_[i] = shift(rng);
  return m;
}

template <int N>
Vec<N> RigidMotion<N>::Apply(const Vec<N>& p) const {
  Vec<N> out = offset_;
  for (int r = 0; r < N; ++r) {
    for (int k = 0; k < N; ++k) out[r] += rotation_[r * N + k] * p[k];
  }
  return out;
}

template class RigidMotion<2>;
template class RigidMotion<3>;

template <int N>
Vec<N> TangencyPoint(const Sphere<N>& si, const Sphere<N>& sj,
                     double rel_tol) {
  const double scale = si.radius() + sj.radius();
  const double d = Distance(si.center(), sj.center());
  if (!FlagsAdmissible(si, sj) ||
      !(std::abs(d - ExpectedCenterDistance(si, sj)) <= rel_tol * scale)) {
    throw GeometryError(ErrorCode::kNotTangent, "spheres are not tangent");
  }
  return BendWeightedPoint(si, sj, rel_tol);
}

template Vec<2> TangencyPoint(const Sphere<2>&, const Sphere<2>&, double);
template Vec<3> TangencyPoint(const Sphere<3>&, const Sphere<3>&, double);

template <int N>
TangentQuadruple<N>::TangentQuadruple(const std::array<Sphere<N>, 4>& spheres,
                                      double rel_tol)
    : spheres_(spheres) {
  const int containing = static_cast<int>(std::count_if(
      spheres_.begin(), spheres_.end(),
      [](const Sphere<N>& s) { return s.containing(); }));

  bool flags_consistent = containing <= 1;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const Sphere<N>& si = spheres_[i];
      const Sphere<N>& sj = spheres_[j];
      const double scale = si.radius() + sj.radius();
      const double d = Distance(si.center(), sj.center());
      const double external = std::abs(d - scale);
      const double internal = std::abs(d - std::abs(si.radius() - sj.radius()));
      if (!(std::min(external, internal) <= rel_tol * scale)) {
        throw GeometryError(ErrorCode::kNotTangent,
                            "spheres " + std::to_string(i) + " and " +
                                std::to_string(j) + " are not tangent");
      }
      if (!FlagsAdmissible(si, sj) ||
          !(std::abs(d - ExpectedCenterDistance(si, sj)) <= rel_tol * scale)) {
        flags_consistent = false;
      }
    }
  }

  std::vector<Vec<N>> points;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const Sphere<N>& si = spheres_[i];
      const Sphere<N>& sj = spheres_[j];
      Vec<N> t;
      if (flags_consistent) {
        t = BendWeightedPoint(si, sj, rel_tol);
      } else {
        const double d = Distance(si.center(), sj.center());
        const bool internal = std::abs(d - std::abs(si.radius() - sj.radius())) <
                              std::abs(d - (si.radius() + sj.radius()));
        t = GeometricContact(si, sj, internal);
      }
      tangency_[i][j] = tangency_[j][i] = t;
      points.push_back(t);
    }
  }

  double max_radius = 0;
  for (const auto& s : spheres_) max_radius = std::max(max_radius, s.radius());
  scale_ = BoundingDiagonal<N>(points);

  if (!flags_consistent) {
    // Mixed containment is only possible when every contact is the same
    // point; anything else is a mislabeled configuration.
    if (!(scale_ <= rel_tol * max_radius)) {
      throw GeometryError(ErrorCode::kNotTangent,
                          "orientation flags disagree with the geometry");
    }
    common_tangency_ = true;
  }
  if (!(scale_ > 0.0)) scale_ = max_radius;
}

template class TangentQuadruple<2>;
template class TangentQuadruple<3>;

template <int N>
Vec<N> WeightedCenter(const TangentQuadruple<N>& q, double rel_tol) {
  const Vec<N> origin = q[0].center();
  Vec<N> acc;
  double bend_sum = 0;
  double bend_abs = 0;
  for (const auto& s : q.spheres()) {
    const double r = SignedBend(s);
    acc += r * (s.center() - origin);
    bend_sum += r;
    bend_abs += std::abs(r);
  }
  if (!(std::abs(bend_sum) >= rel_tol * bend_abs)) {
    throw GeometryError(ErrorCode::kDegenerateBendSum,
                        "signed bends of the quadruple sum to zero");
  }
  return origin + acc / bend_sum;
}

template Vec<2> WeightedCenter(const TangentQuadruple<2>&, double);
template Vec<3> WeightedCenter(const TangentQuadruple<3>&, double);

template <int N>
std::array<Line<N>, 3> OppositeTangencyLines(const TangentQuadruple<N>& q,
                                             double rel_tol) {
  if (q.has_common_tangency()) {
    throw GeometryError(ErrorCode::kCoincidentTangencies,
                        "all spheres share one tangency point");
  }
  std::vector<Line<N>> lines;
  for (const OppositePair& pair : kOppositePairs) {
    const Vec<N>& p = q.tangency(pair.first[0], pair.first[1]);
    const Vec<N>& r = q.tangency(pair.second[0], pair.second[1]);
    if (!(Distance(p, r) > rel_tol * q.scale())) {
      throw GeometryError(ErrorCode::kCoincidentTangencies,
                          "opposite tangencies coincide");
    }
    lines.push_back(Line<N>::Through(p, r));
  }
  return {lines[0], lines[1], lines[2]};
}

template std::array<Line<2>, 3> OppositeTangencyLines(
    const TangentQuadruple<2>&, double);
template std::array<Line<3>, 3> OppositeTangencyLines(
    const TangentQuadruple<3>&, double);

template <int N>
CoincidenceReport<N> VerifyCoincidence(const TangentQuadruple<N>& q,
                                       double rel_tol) {
  CoincidenceReport<N> report;
  if (q.has_common_tangency()) {
    report.point = q.tangency(0, 1);
    report.common_tangency = true;
    return report;
  }
  const auto lines = OppositeTangencyLines(q, rel_tol);
  const Concurrency<N> c = ConcurrencyPoint<N>(lines, rel_tol, q.scale());
  report.point = c.point;
  report.residual = c.residual;
  report.weighted_center = WeightedCenter(q, rel_tol);
  report.center_deviation =
      Distance(c.point, *report.weighted_center) / q.scale();
  return report;
}

template CoincidenceReport<2> VerifyCoincidence(const TangentQuadruple<2>&,
                                                double);
template CoincidenceReport<3> VerifyCoincidence(const TangentQuadruple<3>&,
                                                double);

template <int N>
TangentQuadruple<N> GenerateTangentSpheres(const std::array<double, 4>& radii,
                                           std::uint64_t seed,
                                           Orientation fourth,
                                           double rel_tol) {
  for (double r : radii) {
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw GeometryError(ErrorCode::kInvalidArgument,
                          "radii must be finite and positive");
    }
  }
  const bool wrap = fourth == Orientation::kContaining;
  auto dist = [&](int i, int j) {
    if (j == 3 && wrap) return radii[3] - radii[i];
    return radii[i] + radii[j];
  };
  if (wrap && !(radii[3] > std::max({radii[0], radii[1], radii[2]}))) {
    throw GeometryError(ErrorCode::kUnrealizable,
                        "a containing sphere must be the largest");
  }

  std::mt19937_64 rng(seed);
  const double scale = radii[0] + radii[1] + radii[2] + radii[3];
  const double d01 = dist(0, 1), d02 = dist(0, 2), d12 = dist(1, 2);
  const double d03 = dist(0, 3), d13 = dist(1, 3), d23 = dist(2, 3);

  // Sphere 2 in the xy-plane; the first three radii always form a triangle
  // of center distances.
  const double x2 = (d02 * d02 - d12 * d12 + d01 * d01) / (2.0 * d01);
  const double y2 = std::sqrt(std::max(0.0, d02 * d02 - x2 * x2));

  const double x3 = (d03 * d03 - d13 * d13 + d01 * d01) / (2.0 * d01);
  std::array<Vec<N>, 4> c{};
  c[1][0] = d01;
  c[2][0] = x2;
  c[2][1] = y2;

  if constexpr (N == 3) {
    const double y3 =
        (x2 * x2 + y2 * y2 - 2.0 * x3 * x2 - d23 * d23 + d03 * d03) /
        (2.0 * y2);
    const double z2 = d03 * d03 - x3 * x3 - y3 * y3;
    if (z2 < -rel_tol * scale * scale) {
      throw GeometryError(ErrorCode::kUnrealizable,
                          "no point has the required center distances");
    }
    const double z = std::sqrt(std::max(0.0, z2));
    c[3] = {x3, y3, (rng() & 1u) ? z : -z};
  } else {
    const double h2 = d03 * d03 - x3 * x3;
    if (h2 < -rel_tol * scale * scale) {
      throw GeometryError(ErrorCode::kUnrealizable,
                          "no point has the required center distances");
    }
    const double h = std::sqrt(std::max(0.0, h2));
    const Vec2 up{x3, h}, down{x3, -h};
    const double err_up = std::abs(Distance(up, c[2]) - d23);
    const double err_down = std::abs(Distance(down, c[2]) - d23);
    c[3] = err_up <= err_down ? up : down;
    if (!(std::min(err_up, err_down) <= rel_tol * scale)) {
      throw GeometryError(ErrorCode::kUnrealizable,
                          "radii violate the planar tangency relation");
    }
  }

  const RigidMotion<N> motion = RigidMotion<N>::Random(rng(), scale);
  std::array<Sphere<N>, 4> spheres{
      Sphere<N>(motion.Apply(c[0]), radii[0]),
      Sphere<N>(motion.Apply(c[1]), radii[1]),
      Sphere<N>(motion.Apply(c[2]), radii[2]),
      Sphere<N>(motion.Apply(c[3]), radii[3], fourth)};
  try {
    return TangentQuadruple<N>(spheres, rel_tol);
  } catch (const GeometryError& e) {
    // Trilateration clamped a slightly negative square; the spheres only
    // nearly touch.
    if (e.code() != ErrorCode::kNotTangent) throw;
    throw GeometryError(ErrorCode::kUnrealizable, e.what());
  }
}

template TangentQuadruple<2> GenerateTangentSpheres(const std::array<double, 4>&,
                                                    std::uint64_t, Orientation,
                                                    double);
template TangentQuadruple<3> GenerateTangentSpheres(const std::array<double, 4>&,
                                                    std::uint64_t, Orientation,
                                                    double);

}  // namespace tcenters
