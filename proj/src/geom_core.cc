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

#include "tcenters/geom_core.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace tcenters {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParallelLines:
      return "ParallelLines";
    case ErrorCode::kNotCollinear:
      return "NotCollinear";
    case ErrorCode::kCoincidentPoints:
      return "CoincidentPoints";
    case ErrorCode::kCenterImage:
      return "CenterImage";
    case ErrorCode::kNotTangent:
      return "NotTangent";
    case ErrorCode::kDegenerateBendSum:
      return "DegenerateBendSum";
    case ErrorCode::kCoincidentTangencies:
      return "CoincidentTangencies";
    case ErrorCode::kUnrealizable:
      return "Unrealizable";
    case ErrorCode::kDegenerateTriangle:
      return "DegenerateTriangle";
    case ErrorCode::kNotMutuallyTangent:
      return "NotMutuallyTangent";
    case ErrorCode::kNotExternal:
      return "NotExternal";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

// Magnitude of the sine of the angle between two unit vectors.
double SineBetween(const Vec2& a, const Vec2& b) { return std::abs(Cross(a, b)); }
double SineBetween(const Vec3& a, const Vec3& b) { return Norm(Cross(a, b)); }

// Solves the symmetric N x N system m * x = rhs by Gaussian elimination with
// partial pivoting. Returns false when the matrix is numerically singular.
template <int N>
bool Solve(std::array<std::array<double, N>, N> m, Vec<N> rhs, Vec<N>& x) {
  for (int col = 0; col < N; ++col) {
    int pivot = col;
    for (int r = col + 1; r < N; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (m[pivot][col] == 0.0) return false;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (int r = col + 1; r < N; ++r) {
      double f = m[r][col] / m[col][col];
      for (int k = col; k < N; ++k) m[r][k] -= f * m[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  for (int r = N - 1; r >= 0; --r) {
    double s = rhs[r];
    for (int k = r + 1; k < N; ++k) s -= m[r][k] * x[k];
    x[r] = s / m[r][r];
  }
  return true;
}

}  // namespace

template <int N>
Line<N>::Line(const Vec<N>& anchor, const Vec<N>& direction)
    : anchor_(anchor), direction_(direction) {
  double len = Norm(direction);
  if (!(len > 0.0) || !std::isfinite(len) || !IsFinite(anchor)) {
    throw GeometryError(ErrorCode::kInvalidArgument,
                        "line needs a finite anchor and nonzero direction");
  }
  direction_ /= len;
}

template <int N>
Line<N> Line<N>::Through(const Vec<N>& p, const Vec<N>& q) {
  if (p == q) {
    throw GeometryError(ErrorCode::kCoincidentPoints,
                        "line through two coincident points");
  }
  return Line(p, q - p);
}

template <int N>
Vec<N> Line<N>::ClosestPoint(const Vec<N>& p) const {
  return anchor_ + Dot(p - anchor_, direction_) * direction_;
}

template <int N>
double Line<N>::DistanceTo(const Vec<N>& p) const {
  return Distance(p, ClosestPoint(p));
}

template class Line<2>;
template class Line<3>;

GeneralizedCircle GeneralizedCircle::Circle(const Point2& center,
                                            double radius,
                                            bool contains_partners) {
  if (!(radius > 0.0) || !std::isfinite(radius) || !IsFinite(center)) {
    throw GeometryError(ErrorCode::kInvalidArgument,
                        "circle needs a finite center and positive radius");
  }
  double bend = (contains_partners ? -1.0 : 1.0) / radius;
  return GeneralizedCircle(bend, bend * center, 0.0);
}

GeneralizedCircle GeneralizedCircle::FromBend(double bend,
                                              const Point2& center) {
  if (bend == 0.0 || !std::isfinite(bend) || !IsFinite(center)) {
    throw GeometryError(ErrorCode::kInvalidArgument,
                        "circle needs a finite nonzero bend");
  }
  return GeneralizedCircle(bend, bend * center, 0.0);
}

GeneralizedCircle GeneralizedCircle::Line(const Vec2& normal, double offset) {
  double len = Norm(normal);
  if (!(len > 0.0) || !std::isfinite(len) || !std::isfinite(offset)) {
    throw GeometryError(ErrorCode::kInvalidArgument,
                        "line needs a nonzero normal");
  }
  return GeneralizedCircle(0.0, normal / len, offset / len);
}

Point2 GeneralizedCircle::center() const {
  if (is_line()) {
    throw GeometryError(ErrorCode::kInvalidArgument, "a line has no center");
  }
  return scaled_center_ / bend_;
}

double GeneralizedCircle::radius() const {
  if (is_line()) {
    throw GeometryError(ErrorCode::kInvalidArgument, "a line has no radius");
  }
  return 1.0 / std::abs(bend_);
}

const Vec2& GeneralizedCircle::normal() const {
  if (!is_line()) {
    throw GeometryError(ErrorCode::kInvalidArgument, "a circle has no normal");
  }
  return scaled_center_;
}

Line2 GeneralizedCircle::AsLine() const {
  const Vec2& n = normal();
  return Line2(line_offset_ * n, Perp(n));
}

double GeneralizedCircle::DistanceTo(const Point2& p) const {
  if (is_line()) return std::abs(Dot(scaled_center_, p) - line_offset_);
  return std::abs(Distance(p, center()) - radius());
}

InversionMap::InversionMap(const Point2& center, double power)
    : center_(center), power_(power) {
  if (!(power > 0.0) || !std::isfinite(power) || !IsFinite(center)) {
    throw GeometryError(ErrorCode::kInvalidArgument,
                        "inversion needs a finite center and positive power");
  }
}

Point2 IntersectLines(const Line2& l1, const Line2& l2, double rel_tol) {
  double denom = Cross(l1.direction(), l2.direction());
  if (std::abs(denom) < rel_tol) {
    throw GeometryError(ErrorCode::kParallelLines, "lines are parallel");
  }
  double t = Cross(l2.anchor() - l1.anchor(), l2.direction()) / denom;
  return l1.anchor() + t * l1.direction();
}

template <int N>
Concurrency<N> ConcurrencyPoint(std::span<const Line<N>> lines, double rel_tol,
                                double scale) {
  if (lines.size() < 2) {
    throw GeometryError(ErrorCode::kInvalidArgument,
                        "concurrency needs at least two lines");
  }
  // Parallel pairs are only acceptable when they are the same line; they
  // then add no constraint but do not make the point ambiguous.
  std::vector<Vec<N>> anchors;
  for (const auto& line : lines) anchors.push_back(line.anchor());
  const double anchor_scale =
      scale > 0.0 ? scale : BoundingDiagonal<N>(anchors);
  bool crossing = false;
  for (size_t i = 0; i < lines.size(); ++i) {
    for (size_t j = i + 1; j < lines.size(); ++j) {
      if (SineBetween(lines[i].direction(), lines[j].direction()) >= rel_tol) {
        crossing = true;
      } else if (lines[i].DistanceTo(lines[j].anchor()) >
                 rel_tol * anchor_scale) {
        throw GeometryError(ErrorCode::kParallelLines,
                            "lines " + std::to_string(i) + " and " +
                                std::to_string(j) + " are parallel");
      }
    }
  }
  if (!crossing) {
    throw GeometryError(ErrorCode::kParallelLines,
                        "all lines are parallel");
  }

  // Normal equations of sum_i |(I - d_i d_i^T)(x - a_i)|^2, expressed
  // relative to the first anchor to keep the right-hand side small.
  const Vec<N> origin = lines.front().anchor();
  std::array<std::array<double, N>, N> m{};
  Vec<N> rhs;
  for (const auto& line : lines) {
    const Vec<N>& d = line.direction();
    Vec<N> a = line.anchor() - origin;
    double da = Dot(d, a);
    for (int r = 0; r < N; ++r) {
      for (int k = 0; k < N; ++k) m[r][k] += (r == k ? 1.0 : 0.0) - d[r] * d[k];
      rhs[r] += a[r] - d[r] * da;
    }
  }
  Vec<N> x;
  if (!Solve<N>(m, rhs, x)) {
    throw GeometryError(ErrorCode::kParallelLines,
                        "lines have no isolated common point");
  }

  Concurrency<N> out;
  out.point = origin + x;
  std::vector<Vec<N>> extent;
  extent.reserve(lines.size() + 1);
  for (const auto& line : lines) {
    out.max_distance = std::max(out.max_distance, line.DistanceTo(out.point));
    extent.push_back(line.anchor());
  }
  if (!(scale > 0.0)) {
    extent.push_back(out.point);
    scale = BoundingDiagonal<N>(extent);
  }
  out.residual = scale > 0.0 ? out.max_distance / scale : out.max_distance;
  return out;
}

template Concurrency<2> ConcurrencyPoint<2>(std::span<const Line<2>>, double,
                                            double);
template Concurrency<3> ConcurrencyPoint<3>(std::span<const Line<3>>, double,
                                            double);

double CrossRatio(const Point2& p1, const Point2& p2, const Point2& p3,
                  const Point2& p4, double rel_tol) {
  const std::array<Point2, 4> p{p1, p2, p3, p4};
  const double scale = BoundingDiagonal<2>(p);

  int far_i = 0, far_j = 1;
  double min_sep = Distance(p[0], p[1]);
  double max_sep = min_sep;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      double d = Distance(p[i], p[j]);
      min_sep = std::min(min_sep, d);
      if (d > max_sep) {
        max_sep = d;
        far_i = i;
        far_j = j;
      }
    }
  }
  if (!(min_sep > rel_tol * scale)) {
    throw GeometryError(ErrorCode::kCoincidentPoints,
                        "cross-ratio needs four distinct points");
  }

  const Line2 carrier = Line2::Through(p[far_i], p[far_j]);
  std::array<double, 4> s;
  for (int i = 0; i < 4; ++i) {
    if (carrier.DistanceTo(p[i]) > rel_tol * scale) {
      throw GeometryError(ErrorCode::kNotCollinear,
                          "cross-ratio needs collinear points");
    }
    s[i] = Dot(p[i] - carrier.anchor(), carrier.direction());
  }
  return (s[0] - s[2]) * (s[1] - s[3]) / ((s[0] - s[3]) * (s[1] - s[2]));
}

Point2 Invert(const InversionMap& map, const Point2& p, double rel_tol) {
  Vec2 d = p - map.center();
  double d2 = Dot(d, d);
  if (!(std::sqrt(d2) > rel_tol * std::sqrt(map.power()))) {
    throw GeometryError(ErrorCode::kCenterImage,
                        "the inversion center has no finite image");
  }
  return map.center() + (map.power() / d2) * d;
}

GeneralizedCircle Invert(const InversionMap& map, const GeneralizedCircle& g,
                         double rel_tol) {
  const Point2& c = map.center();
  const double power = map.power();

  if (g.is_line()) {
    const Vec2& n = g.normal();
    double h = g.line_offset() - Dot(n, c);
    if (std::abs(h) <= rel_tol * std::sqrt(power)) return g;
    // Circle through the inversion center; the sign of h says whether the
    // center sat in the enclosed half-plane.
    double bend = 2.0 * h / power;
    return GeneralizedCircle::FromBend(bend, c + (power / (2.0 * h)) * n);
  }

  const Point2 o = g.center();
  const double r = g.radius();
  const Vec2 u = o - c;
  const double d = Norm(u);
  if (std::abs(d - r) <= rel_tol * std::max(d, r)) {
    Vec2 n = u / d;
    double offset = Dot(n, c) + power / (2.0 * r);
    if (g.bend() < 0) {
      n = -n;
      offset = -offset;
    }
    return GeneralizedCircle::Line(n, offset);
  }

  const double denom = d * d - r * r;
  const Point2 center = c + (power / denom) * u;
  const double radius = power * r / std::abs(denom);
  // Points near the inversion center go to infinity, so the image encloses
  // infinity exactly when the original enclosed the center.
  const bool center_enclosed = g.bend() > 0 ? d < r : d > r;
  return GeneralizedCircle::Circle(center, radius, center_enclosed);
}

GeneralizedCircle CircleThroughThreePoints(const Point2& p1, const Point2& p2,
                                           const Point2& p3, double rel_tol) {
  const std::array<Point2, 3> p{p1, p2, p3};
  const double scale = BoundingDiagonal<2>(p);
  int far_i = 0, far_j = 1;
  double min_sep = Distance(p1, p2);
  double max_sep = min_sep;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      double d = Distance(p[i], p[j]);
      min_sep = std::min(min_sep, d);
      if (d > max_sep) {
        max_sep = d;
        far_i = i;
        far_j = j;
      }
    }
  }
  if (!(min_sep > rel_tol * scale)) {
    throw GeometryError(ErrorCode::kCoincidentPoints,
                        "circle through coincident points");
  }

  const Vec2 b = p2 - p1;
  const Vec2 c = p3 - p1;
  const double cross = Cross(b, c);
  if (std::abs(cross) <= rel_tol * scale * scale) {
    Vec2 n = Perp(Normalized(p[far_j] - p[far_i]));
    return GeneralizedCircle::Line(n, Dot(n, p[far_i]));
  }
  const double b2 = Dot(b, b);
  const double c2 = Dot(c, c);
  const Vec2 u{(c[1] * b2 - b[1] * c2) / (2.0 * cross),
               (b[0] * c2 - c[0] * b2) / (2.0 * cross)};
  return GeneralizedCircle::Circle(p1 + u, Norm(u));
}

double TangencyDefect(const GeneralizedCircle& a, const GeneralizedCircle& b) {
  if (a.is_line() && b.is_line()) {
    return std::abs(Cross(a.normal(), b.normal()));
  }
  if (a.is_line() || b.is_line()) {
    const GeneralizedCircle& line = a.is_line() ? a : b;
    const GeneralizedCircle& circle = a.is_line() ? b : a;
    return std::abs(line.DistanceTo(circle.center()) - circle.radius()) /
           circle.radius();
  }
  const double d = Distance(a.center(), b.center());
  const double ra = a.radius();
  const double rb = b.radius();
  const double external = std::abs(d - (ra + rb));
  const double internal = std::abs(d - std::abs(ra - rb));
  return std::min(external, internal) / (ra + rb);
}

}  // namespace tcenters
