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

#ifndef TCENTERS_CENTERS_H_
#define TCENTERS_CENTERS_H_

#include <array>
#include <map>
#include <optional>
#include <string>

#include "tcenters/geom_core.h"
#include "tcenters/soddy.h"
#include "tcenters/triangle.h"

namespace tcenters {

// A center found as the common point of three lines, together with the
// closed-form weighted average it must agree with.
struct CenterEstimate {
  Point2 point;
  // Concurrency residual relative to the triangle scale.
  double residual = 0;
  Point2 formula_point;
  // |point - formula_point| relative to the triangle scale.
  double formula_deviation = 0;
};

// Common point of the lines t_AS t_BC, t_BS t_AC, t_CS t_AB.
CenterEstimate CenterM(const Triangle& t, double rel_tol = kDefaultTolerance);

// Common point of the lines t_AS' t_BC, t_BS' t_AC, t_CS' t_AB. When the
// outer circle is a line its tangencies are the feet of the perpendiculars
// from the vertices, and the weighted average takes the line's unit normal in
// place of R_S' x_S'.
CenterEstimate CenterMPrime(const Triangle& t,
                            double rel_tol = kDefaultTolerance);

struct SoddyCenterPoints {
  Point2 S;
  // Residual of S as the common point of A t_AS, B t_BS, C t_CS.
  double S_residual = 0;
  // Absent when the outer circle is a line.
  std::optional<Point2> S_prime;
  double S_prime_residual = 0;
  GeneralizedCircle outer;
};

SoddyCenterPoints SoddyCenters(const Triangle& t,
                               double rel_tol = kDefaultTolerance);

// Point shared by the altitude through a vertex, the line from that vertex's
// inner Soddy tangency to the opposite contact point, and the vertex circle.
struct AltitudeWitness {
  Point2 point;
  // Distance to the altitude, distance to the tangency line, and distance to
  // the vertex circle, each relative to the triangle scale.
  std::array<double, 3> residuals{};
};

AltitudeWitness AltitudeCircleWitness(const Triangle& t, Vertex v,
                                      double rel_tol = kDefaultTolerance);

struct Trilinears {
  // Signed distances to BC, CA, AB; positive on the triangle's side. These
  // satisfy a*alpha + b*beta + c*gamma = 2 * area.
  std::array<double, 3> distances{};
  // distances / alpha, or the raw distances when alpha is zero.
  std::array<double, 3> normalized{};
};

Trilinears TrilinearCoords(const Triangle& t, const Point2& p);

struct CrossRatioValue {
  enum class Status {
    kOk,
    // Ge and I nearly coincide, so the ratio is not meaningful.
    kConditionLimited,
    // A point is missing (outer line) or two points coincide.
    kDegenerate,
  };
  Status status = Status::kDegenerate;
  double value = 0;
};

std::string_view CrossRatioStatusName(CrossRatioValue::Status s);

struct CenterReport {
  Triangle triangle;
  VertexCircles circles;
  ContactPoints contacts;
  SoddyPair soddy;
  SoddyTangencies soddy_tangencies;

  Point2 M;
  Point2 M_prime;
  Point2 S;
  std::optional<Point2> S_prime;
  Point2 Ge;
  Point2 I;

  // Unit direction of the line through the six centers; absent when they
  // all coincide.
  std::optional<Vec2> soddy_line_direction;
  CrossRatioValue cross_ratio_MMp;
  CrossRatioValue cross_ratio_SSp;
  // Relative residuals keyed by check name.
  std::map<std::string, double> residuals;
  std::map<std::string, Trilinears> trilinears;
};

// Below this separation of Ge and I (relative to the triangle scale) the
// cross-ratios are reported as condition limited.
inline constexpr double kConditionLimit = 1e-6;

// Computes every center and all consistency residuals for one triangle.
CenterReport SoddyLineReport(const Triangle& t,
                             double rel_tol = kDefaultTolerance);

}  // namespace tcenters

#endif  // TCENTERS_CENTERS_H_
