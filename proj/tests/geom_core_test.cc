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

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "tcenters/errors.h"
#include "tcenters/vec.h"

namespace tcenters {
namespace {

constexpr double kTol = 1e-12;

void ExpectNear(const Point2& p, const Point2& q, double tol) {
  EXPECT_NEAR(p[0], q[0], tol);
  EXPECT_NEAR(p[1], q[1], tol);
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no GeometryError thrown";
  return ErrorCode::kInvalidArgument;
}

// Gradient of the summed squared distances to `lines`, evaluated at `x`.
Vec3 SquaredDistanceGradient(const std::vector<Line3>& lines, const Vec3& x) {
  Vec3 g;
  for (const Line3& l : lines) {
    const Vec3 r = x - l.anchor();
    g = g + (r - Dot(r, l.direction()) * l.direction());
  }
  return g;
}

TEST(LineTest, NormalizesDirection) {
  const Line2 l(Point2(1, 2), Vec2(3, 4));
  EXPECT_NEAR(Norm(l.direction()), 1.0, kTol);
  EXPECT_NEAR(l.DistanceTo(Point2(1, 2) + Vec2(-4, 3)), 5.0, kTol);
  ExpectNear(l.ClosestPoint(Point2(4, 6) + Vec2(-4, 3)), Point2(4, 6), kTol);
}

TEST(LineTest, ThroughCoincidentPointsThrows) {
  EXPECT_EQ(CodeOf([] { Line2::Through(Point2(1, 1), Point2(1, 1)); }),
            ErrorCode::kCoincidentPoints);
}

TEST(LineTest, ZeroDirectionThrows) {
  EXPECT_EQ(CodeOf([] { Line3(Point3(0, 0, 0), Vec3(0, 0, 0)); }),
            ErrorCode::kInvalidArgument);
}

TEST(IntersectLinesTest, CramerOracle) {
  const Line2 l1 = Line2::Through(Point2(0, 0), Point2(4, 2));
  const Line2 l2 = Line2::Through(Point2(0, 3), Point2(3, 0));
  // x - 2y = 0 and x + y = 3.
  ExpectNear(IntersectLines(l1, l2), Point2(2, 1), kTol);
}

TEST(IntersectLinesTest, ParallelThrows) {
  const Line2 l1(Point2(0, 0), Vec2(1, 1));
  const Line2 l2(Point2(0, 1), Vec2(2, 2));
  EXPECT_EQ(CodeOf([&] { IntersectLines(l1, l2); }),
            ErrorCode::kParallelLines);
}

TEST(ConcurrencyTest, ExactConcurrencyInThreeDimensions) {
  const Point3 p(1.5, -2, 0.25);
  const std::array<Line3, 3> lines{Line3(p + Vec3(1, 0, 0), Vec3(1, 0, 0)),
                                   Line3(p - Vec3(0, 2, 2), Vec3(0, 1, 1)),
                                   Line3(p + Vec3(3, 1, -2), Vec3(3, 1, -2))};
  const Concurrency<3> c = ConcurrencyPoint<3>(lines);
  EXPECT_NEAR(Distance(c.point, p), 0.0, 1e-12);
  EXPECT_LT(c.residual, 1e-14);
}

TEST(ConcurrencyTest, LeastSquaresZeroesTheGradient) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Line3> lines;
    for (int i = 0; i < 4; ++i) {
      lines.emplace_back(Point3(g(rng), g(rng), g(rng)),
                         Vec3(g(rng), g(rng), g(rng)));
    }
    const Concurrency<3> c = ConcurrencyPoint<3>(lines);
    EXPECT_LT(Norm(SquaredDistanceGradient(lines, c.point)), 1e-9);
    double worst = 0;
    for (const Line3& l : lines) worst = std::max(worst, l.DistanceTo(c.point));
    EXPECT_NEAR(c.max_distance, worst, 1e-12);
  }
}

TEST(ConcurrencyTest, ResidualUsesGivenScale) {
  const std::array<Line2, 3> lines{Line2(Point2(0, 0), Vec2(1, 0)),
                                   Line2(Point2(0, 0), Vec2(0, 1)),
                                   Line2(Point2(0, 0.5), Vec2(1, 1))};
  const Concurrency<2> c = ConcurrencyPoint<2>(lines, kDefaultTolerance, 10.0);
  EXPECT_NEAR(c.residual, c.max_distance / 10.0, 1e-15);
  EXPECT_GT(c.max_distance, 0.0);
}

TEST(ConcurrencyTest, DistinctParallelLinesThrow) {
  const std::array<Line2, 3> lines{Line2(Point2(0, 0), Vec2(1, 0)),
                                   Line2(Point2(0, 1), Vec2(1, 0)),
                                   Line2(Point2(0, 0), Vec2(0, 1))};
  EXPECT_EQ(CodeOf([&] { ConcurrencyPoint<2>(lines); }),
            ErrorCode::kParallelLines);
}

TEST(ConcurrencyTest, RepeatedLineIsAccepted) {
  const std::array<Line2, 3> lines{Line2(Point2(0, 1), Vec2(1, -1)),
                                   Line2(Point2(1, 0), Vec2(-2, 2)),
                                   Line2(Point2(0, 0), Vec2(1, 1))};
  const Concurrency<2> c = ConcurrencyPoint<2>(lines);
  ExpectNear(c.point, Point2(0.5, 0.5), 1e-12);
}

TEST(ConcurrencyTest, SingleRepeatedLineThrows) {
  const std::array<Line2, 3> lines{Line2(Point2(0, 0), Vec2(1, 0)),
                                   Line2(Point2(2, 0), Vec2(1, 0)),
                                   Line2(Point2(5, 0), Vec2(-1, 0))};
  EXPECT_EQ(CodeOf([&] { ConcurrencyPoint<2>(lines); }),
            ErrorCode::kParallelLines);
}

TEST(CrossRatioTest, HarmonicRange) {
  // Parameters 0, 3, 1, -3 along the direction (2, 1).
  const Vec2 d(2, 1);
  const Point2 o(1, -1);
  EXPECT_NEAR(CrossRatio(o, o + 3 * d, o + d, o - 3 * d), -1.0, kTol);
}

TEST(CrossRatioTest, MatchesParameterFormula) {
  const std::array<double, 4> s{0.3, -1.7, 2.2, 5.0};
  const double expected =
      (s[0] - s[2]) * (s[1] - s[3]) / ((s[0] - s[3]) * (s[1] - s[2]));
  const Vec2 d = Normalized(Vec2(-1, 3));
  EXPECT_NEAR(CrossRatio(s[0] * d, s[1] * d, s[2] * d, s[3] * d), expected,
              kTol);
}

TEST(CrossRatioTest, SimilarityInvariant) {
  const std::array<Point2, 4> p{Point2(0, 0), Point2(1, 2), Point2(3, 6),
                                Point2(-2, -4)};
  const double base = CrossRatio(p[0], p[1], p[2], p[3]);
  const double c = std::cos(0.7), s = std::sin(0.7);
  std::array<Point2, 4> q;
  for (int i = 0; i < 4; ++i) {
    q[i] = Point2(3.5 * (c * p[i][0] - s * p[i][1]) - 4,
                  3.5 * (s * p[i][0] + c * p[i][1]) + 9);
  }
  EXPECT_NEAR(CrossRatio(q[0], q[1], q[2], q[3]), base, 1e-12);
}

TEST(CrossRatioTest, RejectsBadInput) {
  EXPECT_EQ(CodeOf([] {
              CrossRatio(Point2(0, 0), Point2(1, 0), Point2(2, 0),
                         Point2(1, 1));
            }),
            ErrorCode::kNotCollinear);
  EXPECT_EQ(CodeOf([] {
              CrossRatio(Point2(0, 0), Point2(1, 0), Point2(0, 0),
                         Point2(2, 0));
            }),
            ErrorCode::kCoincidentPoints);
}

TEST(GeneralizedCircleTest, SignedBend) {
  const GeneralizedCircle outer =
      GeneralizedCircle::Circle(Point2(1, 2), 4, /*contains_partners=*/true);
  EXPECT_DOUBLE_EQ(outer.bend(), -0.25);
  ExpectNear(outer.center(), Point2(1, 2), kTol);
  EXPECT_DOUBLE_EQ(outer.radius(), 4);
  EXPECT_FALSE(outer.is_line());
}

TEST(GeneralizedCircleTest, LineAccessors) {
  const GeneralizedCircle l = GeneralizedCircle::Line(Vec2(0, 2), 6);
  EXPECT_TRUE(l.is_line());
  ExpectNear(l.normal(), Vec2(0, 1), kTol);
  EXPECT_DOUBLE_EQ(l.line_offset(), 3);
  EXPECT_NEAR(l.DistanceTo(Point2(5, -1)), 4, kTol);
  EXPECT_THROW(l.center(), GeometryError);
}

TEST(InversionTest, PointIsInvolution) {
  const InversionMap map(Point2(1, -1), 2.5);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 100; ++i) {
    const Point2 p(u(rng), u(rng));
    const Point2 q = Invert(map, p);
    EXPECT_NEAR(Distance(p, map.center()) * Distance(q, map.center()), 2.5,
                1e-12);
    ExpectNear(Invert(map, q), p, 1e-9);
  }
}

TEST(InversionTest, CenterHasNoImage) {
  const InversionMap map(Point2(1, 1), 1);
  EXPECT_EQ(CodeOf([&] { Invert(map, Point2(1, 1)); }),
            ErrorCode::kCenterImage);
}

TEST(InversionTest, CircleImageMatchesPointImages) {
  const InversionMap map(Point2(0.5, 0.25), 3);
  const GeneralizedCircle c = GeneralizedCircle::Circle(Point2(4, 1), 1.5);
  const GeneralizedCircle img = Invert(map, c);
  for (int i = 0; i < 12; ++i) {
    const double t = 0.5 * i;
    const Point2 p = Point2(4, 1) + 1.5 * Vec2(std::cos(t), std::sin(t));
    EXPECT_LT(img.DistanceTo(Invert(map, p)), 1e-12);
  }
  EXPECT_GT(img.bend(), 0);
}

TEST(InversionTest, EnclosedCenterFlipsBendSign) {
  const InversionMap map(Point2(0.2, 0.1), 1);
  const GeneralizedCircle c = GeneralizedCircle::Circle(Point2(0, 0), 2);
  EXPECT_LT(Invert(map, c).bend(), 0);
}

TEST(InversionTest, CircleThroughCenterBecomesLine) {
  const InversionMap map(Point2(0, 0), 4);
  const GeneralizedCircle c = GeneralizedCircle::Circle(Point2(1, 0), 1);
  const GeneralizedCircle img = Invert(map, c);
  ASSERT_TRUE(img.is_line());
  // The far point (2, 0) maps to (2, 0).
  EXPECT_LT(img.DistanceTo(Point2(2, 0)), 1e-12);
  EXPECT_LT(img.DistanceTo(Point2(2, 7)), 1e-12);
}

TEST(InversionTest, LineBecomesCircleThroughCenter) {
  const InversionMap map(Point2(0, 0), 4);
  const GeneralizedCircle l = GeneralizedCircle::Line(Vec2(1, 0), 2);
  const GeneralizedCircle img = Invert(map, l);
  ASSERT_FALSE(img.is_line());
  ExpectNear(img.center(), Point2(1, 0), 1e-12);
  EXPECT_NEAR(img.radius(), 1, 1e-12);
  ExpectNear(Invert(map, Invert(map, l)).normal(), Vec2(1, 0), 1e-12);
}

TEST(InversionTest, PreservesTangency) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3, 3);
  std::uniform_real_distribution<double> r(0.2, 2);
  for (int i = 0; i < 100; ++i) {
    const Point2 c1(u(rng), u(rng));
    const double r1 = r(rng), r2 = r(rng), angle = u(rng);
    const Point2 c2 = c1 + (r1 + r2) * Vec2(std::cos(angle), std::sin(angle));
    const InversionMap map(Point2(u(rng), u(rng)) * 3.0, r(rng));
    if (std::abs(Distance(map.center(), c1) - r1) < 0.05 ||
        std::abs(Distance(map.center(), c2) - r2) < 0.05) {
      continue;
    }
    const GeneralizedCircle a =
        Invert(map, GeneralizedCircle::Circle(c1, r1));
    const GeneralizedCircle b =
        Invert(map, GeneralizedCircle::Circle(c2, r2));
    EXPECT_LT(TangencyDefect(a, b), 1e-9);
  }
}

TEST(CircleThroughThreePointsTest, Circumcircle) {
  const GeneralizedCircle c =
      CircleThroughThreePoints(Point2(0, 0), Point2(4, 0), Point2(0, 3));
  ExpectNear(c.center(), Point2(2, 1.5), kTol);
  EXPECT_NEAR(c.radius(), 2.5, kTol);
}

TEST(CircleThroughThreePointsTest, CollinearGivesLine) {
  const GeneralizedCircle c =
      CircleThroughThreePoints(Point2(0, 1), Point2(1, 2), Point2(3, 4));
  ASSERT_TRUE(c.is_line());
  EXPECT_LT(c.DistanceTo(Point2(-7, -6)), kTol);
}

TEST(TangencyDefectTest, DetectsTouchingAndSeparated) {
  const GeneralizedCircle a = GeneralizedCircle::Circle(Point2(0, 0), 1);
  EXPECT_NEAR(
      TangencyDefect(a, GeneralizedCircle::Circle(Point2(3, 0), 2)), 0, kTol);
  EXPECT_NEAR(
      TangencyDefect(a, GeneralizedCircle::Circle(Point2(0.5, 0), 1.5)), 0,
      kTol);
  EXPECT_NEAR(TangencyDefect(a, GeneralizedCircle::Line(Vec2(0, 1), -1)), 0,
              kTol);
  EXPECT_GT(
      TangencyDefect(a, GeneralizedCircle::Circle(Point2(4, 0), 2)), 0.1);
}

}  // namespace
}  // namespace tcenters
