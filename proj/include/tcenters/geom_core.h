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

#ifndef TCENTERS_GEOM_CORE_H_
#define TCENTERS_GEOM_CORE_H_

#include <array>
#include <span>

#include "tcenters/errors.h"
#include "tcenters/vec.h"

namespace tcenters {

// Default relative tolerance. Residuals are divided by a configuration scale
// (usually a bounding-box diagonal) before being compared against it.
inline constexpr double kDefaultTolerance = 1e-9;

// Infinite line through `anchor` with a unit `direction`.
template <int N>
class Line {
 public:
  // Normalizes `direction`. Throws kInvalidArgument for a zero or non-finite
  // direction.
  Line(const Vec<N>& anchor, const Vec<N>& direction);

  // Line through two points; throws kCoincidentPoints when p == q.
  static Line Through(const Vec<N>& p, const Vec<N>& q);

  const Vec<N>& anchor() const { return anchor_; }
  const Vec<N>& direction() const { return direction_; }

  Vec<N> ClosestPoint(const Vec<N>& p) const;
  double DistanceTo(const Vec<N>& p) const;

 private:
  Vec<N> anchor_;
  Vec<N> direction_;
};

using Line2 = Line<2>;
using Line3 = Line<3>;

// Oriented circle or line in curvature-center coordinates.
//
// For a circle, `bend` is the signed curvature and `scaled_center` is
// bend * center. For a line, `bend` is zero, `scaled_center` is the unit
// normal and `line_offset` the signed distance of the line from the origin,
// i.e. the line is {x : normal . x == line_offset}. The normal points into
// the side the line "encloses", which is the limit of a circle's center
// direction as its radius grows.
//
// Positive bend: the tangent partners lie outside. Negative bend: the circle
// contains its tangent partners.
class GeneralizedCircle {
 public:
  // `contains_partners` selects the negative bend.
  static GeneralizedCircle Circle(const Point2& center, double radius,
                                  bool contains_partners = false);
  static GeneralizedCircle FromBend(double bend, const Point2& center);
  // The normal is normalized here.
  static GeneralizedCircle Line(const Vec2& normal, double offset);

  double bend() const { return bend_; }
  const Vec2& scaled_center() const { return scaled_center_; }
  double line_offset() const { return line_offset_; }

  bool is_line() const { return bend_ == 0.0; }
  // Circle accessors; throw kInvalidArgument on a line.
  Point2 center() const;
  double radius() const;
  // Line accessor; throws kInvalidArgument on a circle.
  const Vec2& normal() const;
  Line2 AsLine() const;

  // Unsigned distance from `p` to the curve.
  double DistanceTo(const Point2& p) const;

 private:
  GeneralizedCircle(double bend, const Vec2& scaled_center, double offset)
      : bend_(bend), scaled_center_(scaled_center), line_offset_(offset) {}

  double bend_;
  Vec2 scaled_center_;
  double line_offset_;
};

// Circle inversion x -> center + power * (x - center) / |x - center|^2.
class InversionMap {
 public:
  // Throws kInvalidArgument unless power > 0 and the center is finite.
  InversionMap(const Point2& center, double power);

  const Point2& center() const { return center_; }
  double power() const { return power_; }

 private:
  Point2 center_;
  double power_;
};

Point2 IntersectLines(const Line2& l1, const Line2& l2,
                      double rel_tol = kDefaultTolerance);

template <int N>
struct Concurrency {
  Vec<N> point;
  // Largest distance from `point` to any of the lines.
  double max_distance = 0;
  // max_distance divided by the configuration scale.
  double residual = 0;
};

// Least-squares common point of two or more lines. Identical lines are
// allowed as long as some pair crosses. When `scale` is not
// positive it defaults to the bounding diagonal of the anchors and the
// returned point. Throws kParallelLines if any pair is parallel.
template <int N>
Concurrency<N> ConcurrencyPoint(std::span<const Line<N>> lines,
                                double rel_tol = kDefaultTolerance,
                                double scale = 0.0);

template <int N>
Concurrency<N> ConcurrencyPoint(const std::array<Line<N>, 3>& lines,
                                double rel_tol = kDefaultTolerance,
                                double scale = 0.0) {
  return ConcurrencyPoint<N>(std::span<const Line<N>>(lines), rel_tol, scale);
}

// Cross-ratio (p1, p2; p3, p4) of four collinear points.
double CrossRatio(const Point2& p1, const Point2& p2, const Point2& p3,
                  const Point2& p4, double rel_tol = kDefaultTolerance);

Point2 Invert(const InversionMap& map, const Point2& p,
              double rel_tol = kDefaultTolerance);
GeneralizedCircle Invert(const InversionMap& map, const GeneralizedCircle& g,
                         double rel_tol = kDefaultTolerance);

// Circumcircle of three points, or the line through them when collinear.
GeneralizedCircle CircleThroughThreePoints(const Point2& p1, const Point2& p2,
                                           const Point2& p3,
                                           double rel_tol = kDefaultTolerance);

// How far two generalized circles are from touching, relative to their size.
// Zero for tangent pairs (internally or externally).
double TangencyDefect(const GeneralizedCircle& a, const GeneralizedCircle& b);

}  // namespace tcenters

#endif  // TCENTERS_GEOM_CORE_H_
