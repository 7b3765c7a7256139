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

#include "tcenters/soddy.h"

#include <algorithm>
#include <cmath>
#include <complex>

namespace tcenters {

namespace {

using Complex = std::complex<double>;

struct Disk {
  Point2 center;
  double radius;
};

// Residual of |z - c_i| = |r_i + rho| over the three circles, where rho is
// the signed radius 1/k of the fourth circle.
double TangencyResidual(const std::array<Disk, 3>& disks, const Point2& z,
                        double rho) {
  double worst = 0;
  for (const Disk& d : disks) {
    worst = std::max(worst,
                     std::abs(Distance(z, d.center) - std::abs(d.radius + rho)));
  }
  return worst;
}

// Both intersections of circles (c1, s1) and (c2, s2), if any.
std::optional<std::array<Point2, 2>> IntersectCircles(const Point2& c1,
                                                      double s1,
                                                      const Point2& c2,
                                                      double s2) {
  const Vec2 delta = c2 - c1;
  const double d = Norm(delta);
  if (!(d > 0.0)) return std::nullopt;
  const double along = (d * d + s1 * s1 - s2 * s2) / (2.0 * d);
  const double h2 = s1 * s1 - along * along;
  if (h2 < -1e-12 * s1 * s1) return std::nullopt;
  const double h = std::sqrt(std::max(0.0, h2));
  const Vec2 u = delta / d;
  const Point2 base = c1 + along * u;
  return std::array<Point2, 2>{base + h * Perp(u), base - h * Perp(u)};
}

// One Newton step on F_i = |z - c_i| - sigma (r_i + rho) in (x, y, rho).
// Returns false if the Jacobian is singular.
bool NewtonStep(const std::array<Disk, 3>& disks, Point2& z, double& rho) {
  const double sigma = rho > 0 ? 1.0 : -1.0;
  double m[3][4];
  for (int i = 0; i < 3; ++i) {
    const Vec2 delta = z - disks[i].center;
    const double len = Norm(delta);
    if (!(len > 0.0)) return false;
    m[i][0] = delta[0] / len;
    m[i][1] = delta[1] / len;
    m[i][2] = -sigma;
    m[i][3] = -(len - sigma * (disks[i].radius + rho));
  }
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (m[pivot][col] == 0.0) return false;
    for (int k = 0; k < 4; ++k) std::swap(m[pivot][k], m[col][k]);
    for (int r = col + 1; r < 3; ++r) {
      const double f = m[r][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[r][k] -= f * m[col][k];
    }
  }
  double x[3];
  for (int r = 2; r >= 0; --r) {
    double s = m[r][3];
    for (int k = r + 1; k < 3; ++k) s -= m[r][k] * x[k];
    x[r] = s / m[r][r];
  }
  z += Vec2{x[0], x[1]};
  rho += x[2];
  return std::isfinite(z[0]) && std::isfinite(z[1]) && std::isfinite(rho);
}

// Center of the circle with bend k4 tangent to all three disks (coordinates
// relative to the centroid of the disk centers).
//
// The complex Descartes relation gives two candidates; the one satisfying
// the distance equations wins. If neither does, the center is recovered from
// two of the distance equations instead. Either way the result is polished
// by Newton steps, which may also adjust the radius slightly.
std::pair<Point2, double> RecoverCircle(const std::array<Disk, 3>& disks,
                                        const std::array<double, 3>& k,
                                        double k4, double scale) {
  std::array<Complex, 3> z;
  for (int i = 0; i < 3; ++i) {
    z[i] = Complex(disks[i].center[0], disks[i].center[1]);
  }
  const Complex w = k[0] * z[0] + k[1] * z[1] + k[2] * z[2];
  const Complex root = std::sqrt(k[0] * k[1] * z[0] * z[1] +
                                 k[1] * k[2] * z[1] * z[2] +
                                 k[2] * k[0] * z[2] * z[0]);
  double rho = 1.0 / k4;
  const Complex plus = (w + 2.0 * root) / k4;
  const Complex minus = (w - 2.0 * root) / k4;
  Point2 best{plus.real(), plus.imag()};
  const Point2 alt{minus.real(), minus.imag()};
  double best_res = TangencyResidual(disks, best, rho);
  if (const double r = TangencyResidual(disks, alt, rho); r < best_res) {
    best = alt;
    best_res = r;
  }

  const double size = scale + std::abs(rho);
  if (!(best_res <= 1e-6 * size)) {
    if (auto cand = IntersectCircles(disks[0].center,
                                     std::abs(disks[0].radius + rho),
                                     disks[1].center,
                                     std::abs(disks[1].radius + rho))) {
      for (const Point2& p : *cand) {
        if (const double r = TangencyResidual(disks, p, rho); r < best_res) {
          best = p;
          best_res = r;
        }
      }
    }
  }

  for (int iter = 0; iter < 4 && best_res > 0.0; ++iter) {
    Point2 z_next = best;
    double rho_next = rho;
    if (!NewtonStep(disks, z_next, rho_next) || (rho_next > 0) != (rho > 0)) {
      break;
    }
    const double r = TangencyResidual(disks, z_next, rho_next);
    if (!(r < best_res)) break;
    best = z_next;
    rho = rho_next;
    best_res = r;
  }
  return {best, rho};
}

}  // namespace

std::string_view OuterClassName(OuterClass c) {
  switch (c) {
    case OuterClass::kExternallyTangent:
      return "ExternallyTangent";
    case OuterClass::kContaining:
      return "Containing";
    case OuterClass::kTangentLine:
      return "TangentLine";
  }
  return "Unknown";
}

std::optional<Sphere2> SoddyPair::OuterSphere() const {
  if (outer.is_line()) return std::nullopt;
  return Sphere2(outer.center(), outer.radius(),
                 outer.bend() < 0 ? Orientation::kContaining
                                  : Orientation::kExternal);
}

double DescartesDefect(double k1, double k2, double k3, double k4) {
  const double sum = k1 + k2 + k3 + k4;
  const double squares = k1 * k1 + k2 * k2 + k3 * k3 + k4 * k4;
  const double norm = std::abs(k1) + std::abs(k2) + std::abs(k3) + std::abs(k4);
  return std::abs(sum * sum - 2.0 * squares) / (norm * norm);
}

SoddyPair SoddyCircles(const Sphere2& a, const Sphere2& b, const Sphere2& c,
                       double rel_tol) {
  const std::array<const Sphere2*, 3> in{&a, &b, &c};
  for (const Sphere2* s : in) {
    if (s->containing()) {
      throw GeometryError(ErrorCode::kNotExternal,
                          "Soddy circles need three external circles");
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const double sum = in[i]->radius() + in[j]->radius();
      const double d = Distance(in[i]->center(), in[j]->center());
      if (!(std::abs(d - sum) <= rel_tol * sum)) {
        throw GeometryError(ErrorCode::kNotMutuallyTangent,
                            "circles are not mutually externally tangent");
      }
    }
  }

  const Point2 origin = (a.center() + b.center() + c.center()) / 3.0;
  const std::array<Disk, 3> disks{Disk{a.center() - origin, a.radius()},
                                  Disk{b.center() - origin, b.radius()},
                                  Disk{c.center() - origin, c.radius()}};
  const std::array<double, 3> k{1.0 / a.radius(), 1.0 / b.radius(),
                                1.0 / c.radius()};
  const double scale =
      BoundingDiagonal<2>({a.center(), b.center(), c.center()});

  const double sum = k[0] + k[1] + k[2];
  const double root = std::sqrt(k[0] * k[1] + k[1] * k[2] + k[2] * k[0]);
  const double k_inner = sum + 2.0 * root;
  const double k_outer = sum - 2.0 * root;
  const double k_max = std::max({k[0], k[1], k[2]});

  const auto [inner_center, inner_rho] = RecoverCircle(disks, k, k_inner, scale);
  const Sphere2 inner(inner_center + origin, inner_rho);

  if (std::abs(k_outer) < rel_tol * k_max) {
    // Common tangent line with all three circles on the side of n:
    // n . c_i - r_i = h.
    const Vec2 e1 = disks[0].center - disks[1].center;
    const Vec2 e2 = disks[0].center - disks[2].center;
    const double f1 = disks[0].radius - disks[1].radius;
    const double f2 = disks[0].radius - disks[2].radius;
    const double det = Cross(e1, e2);
    Vec2 n{(f1 * e2[1] - f2 * e1[1]) / det, (e1[0] * f2 - e2[0] * f1) / det};
    n = Normalized(n);
    double h = 0;
    for (const Disk& d : disks) h += Dot(n, d.center) - d.radius;
    h /= 3.0;
    // The line's own normal faces away from the circles it touches.
    return {inner, GeneralizedCircle::Line(-n, -(h + Dot(n, origin))),
            OuterClass::kTangentLine};
  }

  const auto [outer_center, outer_rho] = RecoverCircle(disks, k, k_outer, scale);
  const bool containing = outer_rho < 0;
  return {inner,
          GeneralizedCircle::Circle(outer_center + origin,
                                    std::abs(outer_rho), containing),
          containing ? OuterClass::kContaining
                     : OuterClass::kExternallyTangent};
}

SoddyTangencies MakeSoddyTangencies(const SoddyPair& pair,
                                    const VertexCircles& o, double rel_tol) {
  const std::array<const Sphere2*, 3> circles{&o.A, &o.B, &o.C};
  const std::optional<Sphere2> outer = pair.OuterSphere();
  SoddyTangencies out;
  for (int i = 0; i < 3; ++i) {
    out.inner[i] = TangencyPoint(*circles[i], pair.inner, rel_tol);
    out.outer[i] = outer ? TangencyPoint(*circles[i], *outer, rel_tol)
                         : pair.outer.AsLine().ClosestPoint(circles[i]->center());
  }
  return out;
}

InversionConstruction ConstructInnerSoddyByInversion(const Triangle& t,
                                                     double rel_tol) {
  const VertexCircles o = MakeVertexCircles(t, rel_tol);
  const ContactPoints contacts = MakeContactPoints(t, rel_tol);

  std::array<Line2, 3> altitudes{Line2({0, 0}, {1, 0}), Line2({0, 0}, {1, 0}),
                                 Line2({0, 0}, {1, 0})};
  std::array<Point2, 3> far_points;
  std::array<Point2, 3> tangencies;
  for (Vertex v : {Vertex::kA, Vertex::kB, Vertex::kC}) {
    const int i = static_cast<int>(v);
    const auto [u, w] = OtherVertices(v);
    const Point2& apex = t.vertex(v);
    Vec2 up = Normalized(Perp(t.vertex(w) - t.vertex(u)));
    if (Dot(up, apex - t.vertex(u)) < 0) up = -up;
    altitudes[i] = Line2(apex, up);

    const Sphere2& circle = o[v];
    far_points[i] = apex + circle.radius() * up;

    // The circle about the contact point that crosses the vertex circle at
    // right angles fixes the vertex circle, so it swaps the far point with
    // the second intersection of the chord through the contact point.
    const Point2& contact = contacts.Opposite(v);
    const double d = Distance(contact, apex);
    const InversionMap orthogonal(contact,
                                  d * d - circle.radius() * circle.radius());
    tangencies[i] = Invert(orthogonal, far_points[i], rel_tol);
  }

  const GeneralizedCircle through = CircleThroughThreePoints(
      tangencies[0], tangencies[1], tangencies[2], rel_tol);
  if (through.is_line()) {
    throw GeometryError(ErrorCode::kDegenerateTriangle,
                        "degenerate triangle: constructed tangencies are "
                        "collinear");
  }
  return {altitudes, far_points, tangencies,
          Sphere2(through.center(), through.radius())};
}

}  // namespace tcenters
