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

#ifndef TCENTERS_SODDY_H_
#define TCENTERS_SODDY_H_

#include <array>
#include <optional>
#include <string_view>

#include "tcenters/geom_core.h"
#include "tcenters/tangency.h"
#include "tcenters/triangle.h"

namespace tcenters {

// How the outer Soddy circle touches the three vertex circles.
enum class OuterClass { kExternallyTangent, kContaining, kTangentLine };

std::string_view OuterClassName(OuterClass c);

// The two generalized circles tangent to three mutually tangent circles.
// `inner` lives in the bounded curvilinear triangle between them and is
// always external; `outer` lives in the unbounded region.
struct SoddyPair {
  Sphere2 inner;
  GeneralizedCircle outer;
  OuterClass outer_class;

  // The outer circle as a sphere, or nullopt for the tangent line.
  std::optional<Sphere2> OuterSphere() const;
};

// Solves the Descartes relation for both fourth bends and recovers the
// centers. Throws kNotExternal if an input is containing and
// kNotMutuallyTangent if the inputs do not pairwise touch.
SoddyPair SoddyCircles(const Sphere2& a, const Sphere2& b, const Sphere2& c,
                       double rel_tol = kDefaultTolerance);

inline SoddyPair SoddyCircles(const VertexCircles& o,
                              double rel_tol = kDefaultTolerance) {
  return SoddyCircles(o.A, o.B, o.C, rel_tol);
}

// |(k1+k2+k3+k4)^2 - 2(k1^2+k2^2+k3^2+k4^2)| / (|k1|+|k2|+|k3|+|k4|)^2.
double DescartesDefect(double k1, double k2, double k3, double k4);

struct SoddyTangencies {
  // Where each vertex circle touches the inner circle.
  std::array<Point2, 3> inner;
  // Where each vertex circle touches the outer circle (or line).
  std::array<Point2, 3> outer;

  const Point2& Inner(Vertex v) const { return inner[static_cast<int>(v)]; }
  const Point2& Outer(Vertex v) const { return outer[static_cast<int>(v)]; }
};

SoddyTangencies MakeSoddyTangencies(const SoddyPair& pair,
                                    const VertexCircles& o,
                                    double rel_tol = kDefaultTolerance);

struct InversionConstruction {
  // Altitude line through each vertex.
  std::array<Line2, 3> altitudes;
  // Point of each vertex circle on its altitude, beyond the vertex as seen
  // from the opposite side.
  std::array<Point2, 3> far_points;
  // far_points inverted through the circle centered at the opposite contact
  // point that crosses the vertex circle at right angles.
  std::array<Point2, 3> tangencies;
  Sphere2 inner;
};

// Builds the inner Soddy circle without the Descartes relation: each
// tangency on a vertex circle is the inverse of that circle's far altitude
// point, and the circle through the three tangencies is the result.
InversionConstruction ConstructInnerSoddyByInversion(
    const Triangle& t, double rel_tol = kDefaultTolerance);

}  // namespace tcenters

#endif  // TCENTERS_SODDY_H_
