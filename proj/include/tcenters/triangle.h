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

#ifndef TCENTERS_TRIANGLE_H_
#define TCENTERS_TRIANGLE_H_

#include <array>

#include "tcenters/geom_core.h"
#include "tcenters/tangency.h"
#include "tcenters/vec.h"

namespace tcenters {

enum class Vertex { kA = 0, kB = 1, kC = 2 };

// Non-degenerate planar triangle ABC. Side a is opposite A (|BC|), b is |CA|
// and c is |AB|.
class Triangle {
 public:
  // Throws kDegenerateTriangle when twice the area over the squared longest
  // side does not exceed rel_tol.
  static Triangle FromVertices(const Point2& a, const Point2& b,
                               const Point2& c,
                               double rel_tol = kDefaultTolerance);

  // Canonical placement: C at the origin, B on the positive x-axis and A in
  // the upper half-plane.
  static Triangle FromSides(double a, double b, double c,
                            double rel_tol = kDefaultTolerance);

  const Point2& A() const { return v_[0]; }
  const Point2& B() const { return v_[1]; }
  const Point2& C() const { return v_[2]; }
  const Point2& vertex(Vertex v) const { return v_[static_cast<int>(v)]; }
  const std::array<Point2, 3>& vertices() const { return v_; }

  double a() const { return sides_[0]; }
  double b() const { return sides_[1]; }
  double c() const { return sides_[2]; }
  // Length of the side opposite `v`.
  double side(Vertex v) const { return sides_[static_cast<int>(v)]; }

  // Positive for counter-clockwise vertex order.
  double SignedArea() const;
  double Area() const;
  double Scale() const { return BoundingDiagonal<2>(v_); }

 private:
  Triangle(const std::array<Point2, 3>& v, double rel_tol);

  std::array<Point2, 3> v_;
  std::array<double, 3> sides_;
};

// The two vertices other than `v`, in cyclic order.
std::array<Vertex, 2> OtherVertices(Vertex v);

struct VertexCircles {
  Sphere2 A;
  Sphere2 B;
  Sphere2 C;

  const Sphere2& operator[](Vertex v) const;
};

// Mutually externally tangent circles centered at the vertices, with radii
// (-a+b+c)/2, (a-b+c)/2 and (a+b-c)/2.
VertexCircles MakeVertexCircles(const Triangle& t,
                                double rel_tol = kDefaultTolerance);

Point2 Incenter(const Triangle& t);
double Inradius(const Triangle& t);

// Touching points of the vertex circles. Each lies on its side and on the
// incircle.
struct ContactPoints {
  Point2 BC;
  Point2 AC;
  Point2 AB;

  // Contact point on the side opposite `v`.
  const Point2& Opposite(Vertex v) const;
};

ContactPoints MakeContactPoints(const Triangle& t,
                                double rel_tol = kDefaultTolerance);

// Weighted average of the vertices with the vertex-circle bends as weights.
Point2 GergonnePoint(const Triangle& t, double rel_tol = kDefaultTolerance);

// The same point as the concurrency of the cevians A t_BC, B t_AC, C t_AB.
Concurrency<2> GergonneByCevians(const Triangle& t,
                                 double rel_tol = kDefaultTolerance);

}  // namespace tcenters

#endif  // TCENTERS_TRIANGLE_H_
