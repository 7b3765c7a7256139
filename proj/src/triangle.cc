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

#include "tcenters/triangle.h"

#include <algorithm>
#include <cmath>

namespace tcenters {

Triangle::Triangle(const std::array<Point2, 3>& v, double rel_tol) : v_(v) {
  for (const auto& p : v_) {
    if (!IsFinite(p)) {
      throw GeometryError(ErrorCode::kDegenerateTriangle,
                          "degenerate triangle: non-finite vertex");
    }
  }
  sides_ = {Distance(v_[1], v_[2]), Distance(v_[2], v_[0]),
            Distance(v_[0], v_[1])};
  const double longest = *std::max_element(sides_.begin(), sides_.end());
  if (!(longest > 0.0) ||
      !(2.0 * Area() / (longest * longest) > rel_tol)) {
    throw GeometryError(ErrorCode::kDegenerateTriangle,
                        "degenerate triangle: vertices are collinear");
  }
}

Triangle Triangle::FromVertices(const Point2& a, const Point2& b,
                                const Point2& c, double rel_tol) {
  return Triangle({a, b, c}, rel_tol);
}

Triangle Triangle::FromSides(double a, double b, double c, double rel_tol) {
  for (double s : {a, b, c}) {
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw GeometryError(ErrorCode::kDegenerateTriangle,
                          "degenerate triangle: side lengths must be positive");
    }
  }
  const double perimeter = a + b + c;
  if (!(-a + b + c > rel_tol * perimeter) ||
      !(a - b + c > rel_tol * perimeter) ||
      !(a + b - c > rel_tol * perimeter)) {
    throw GeometryError(
        ErrorCode::kDegenerateTriangle,
        "degenerate triangle: side lengths violate the triangle inequality");
  }
  const double x = (a * a + b * b - c * c) / (2.0 * a);
  const double y = std::sqrt(std::max(0.0, b * b - x * x));
  return Triangle({Point2{x, y}, Point2{a, 0.0}, Point2{0.0, 0.0}}, rel_tol);
}

double Triangle::SignedArea() const {
  return 0.5 * Cross(v_[1] - v_[0], v_[2] - v_[0]);
}

double Triangle::Area() const { return std::abs(SignedArea()); }

std::array<Vertex, 2> OtherVertices(Vertex v) {
  switch (v) {
    case Vertex::kA:
      return {Vertex::kB, Vertex::kC};
    case Vertex::kB:
      return {Vertex::kC, Vertex::kA};
    case Vertex::kC:
      break;
  }
  return {Vertex::kA, Vertex::kB};
}

const Sphere2& VertexCircles::operator[](Vertex v) const {
  switch (v) {
    case Vertex::kA:
      return A;
    case Vertex::kB:
      return B;
    case Vertex::kC:
      break;
  }
  return C;
}

VertexCircles MakeVertexCircles(const Triangle& t, double rel_tol) {
  const double ra = (-t.a() + t.b() + t.c()) / 2.0;
  const double rb = (t.a() - t.b() + t.c()) / 2.0;
  const double rc = (t.a() + t.b() - t.c()) / 2.0;
  if (!(std::min({ra, rb, rc}) > rel_tol * t.Scale())) {
    throw GeometryError(ErrorCode::kDegenerateTriangle,
                        "degenerate triangle: a vertex circle vanishes");
  }
  return {Sphere2(t.A(), ra), Sphere2(t.B(), rb), Sphere2(t.C(), rc)};
}

Point2 Incenter(const Triangle& t) {
  const Point2& o = t.C();
  return o + (t.a() * (t.A() - o) + t.b() * (t.B() - o)) /
                 (t.a() + t.b() + t.c());
}

double Inradius(const Triangle& t) {
  return 2.0 * t.Area() / (t.a() + t.b() + t.c());
}

const Point2& ContactPoints::Opposite(Vertex v) const {
  switch (v) {
    case Vertex::kA:
      return BC;
    case Vertex::kB:
      return AC;
    case Vertex::kC:
      break;
  }
  return AB;
}

ContactPoints MakeContactPoints(const Triangle& t, double rel_tol) {
  const VertexCircles o = MakeVertexCircles(t, rel_tol);
  return {TangencyPoint(o.B, o.C, rel_tol), TangencyPoint(o.A, o.C, rel_tol),
          TangencyPoint(o.A, o.B, rel_tol)};
}

Point2 GergonnePoint(const Triangle& t, double rel_tol) {
  const VertexCircles o = MakeVertexCircles(t, rel_tol);
  const double ra = SignedBend(o.A);
  const double rb = SignedBend(o.B);
  const double rc = SignedBend(o.C);
  const Point2& origin = t.C();
  return origin +
         (ra * (t.A() - origin) + rb * (t.B() - origin)) / (ra + rb + rc);
}

Concurrency<2> GergonneByCevians(const Triangle& t, double rel_tol) {
  const ContactPoints tp = MakeContactPoints(t, rel_tol);
  const std::array<Line2, 3> cevians{Line2::Through(t.A(), tp.BC),
                                     Line2::Through(t.B(), tp.AC),
                                     Line2::Through(t.C(), tp.AB)};
  return ConcurrencyPoint<2>(cevians, rel_tol, t.Scale());
}

}  // namespace tcenters
