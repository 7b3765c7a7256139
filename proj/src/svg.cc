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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "tcenters/cli_report.h"

namespace tcenters {

namespace {

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  // Avoid "-0" so regenerated figures diff cleanly.
  return std::string(buf) == "-0" ? "0" : buf;
}

class SvgWriter {
 public:
  SvgWriter(double min_x, double min_y, double max_x, double max_y)
      : min_x_(min_x), max_y_(max_y), width_(max_x - min_x),
        height_(max_y - min_y) {}

  // Mathematical orientation: SVG y grows downwards, so y is negated.
  std::string X(double x) const { return Num(x); }
  std::string Y(double y) const { return Num(-y); }

  void Circle(const Point2& c, double r, std::string_view cls) {
    body_ << "  <circle class=\"" << cls << "\" cx=\"" << X(c[0])
          << "\" cy=\"" << Y(c[1]) << "\" r=\"" << Num(r) << "\"/>\n";
  }

  void Segment(const Point2& p, const Point2& q, std::string_view cls) {
    body_ << "  <line class=\"" << cls << "\" x1=\"" << X(p[0]) << "\" y1=\""
          << Y(p[1]) << "\" x2=\"" << X(q[0]) << "\" y2=\"" << Y(q[1])
          << "\"/>\n";
  }

  void Polygon(const std::array<Point2, 3>& v, std::string_view cls) {
    body_ << "  <polygon class=\"" << cls << "\" points=\"";
    for (size_t i = 0; i < v.size(); ++i) {
      body_ << (i ? " " : "") << X(v[i][0]) << "," << Y(v[i][1]);
    }
    body_ << "\"/>\n";
  }

  void Marker(const Point2& p, std::string_view label, double size) {
    body_ << "  <g class=\"center-marker\"><circle cx=\"" << X(p[0])
          << "\" cy=\"" << Y(p[1]) << "\" r=\"" << Num(size) << "\"/>"
          << "<text x=\"" << X(p[0] + 1.5 * size) << "\" y=\""
          << Y(p[1] + 1.5 * size) << "\">" << label << "</text></g>\n";
  }

  std::string Finish(double stroke) const {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
       << Num(min_x_) << " " << Num(-max_y_) << " " << Num(width_) << " "
       << Num(height_) << "\" width=\"800\" height=\""
       << Num(std::round(800.0 * height_ / width_)) << "\">\n"
       << "  <style>\n"
       << "    .triangle { fill: none; stroke: #000; stroke-width: "
       << Num(stroke) << "; }\n"
       << "    .vertex-circle { fill: none; stroke: #1f77b4; stroke-width: "
       << Num(stroke) << "; }\n"
       << "    .soddy-inner { fill: none; stroke: #d62728; stroke-width: "
       << Num(stroke) << "; }\n"
       << "    .soddy-outer { fill: none; stroke: #2ca02c; stroke-width: "
       << Num(stroke) << "; }\n"
       << "    .concurrency-line { stroke: #7f7f7f; stroke-width: "
       << Num(0.6 * stroke) << "; stroke-dasharray: " << Num(4 * stroke)
       << " " << Num(2 * stroke) << "; }\n"
       << "    .concurrency-line-prime { stroke: #9467bd; stroke-width: "
       << Num(0.6 * stroke) << "; stroke-dasharray: " << Num(4 * stroke)
       << " " << Num(2 * stroke) << "; }\n"
       << "    .center-marker { fill: #000; font-family: sans-serif; "
       << "font-size: " << Num(12 * stroke) << "px; }\n"
       << "  </style>\n"
       << body_.str() << "</svg>\n";
    return os.str();
  }

 private:
  double min_x_, max_y_, width_, height_;
  std::ostringstream body_;
};

// Segment of `line`'s carrier covering all of `points`.
std::pair<Point2, Point2> Span(const Point2& a, const Point2& b,
                               std::initializer_list<Point2> points) {
  const Vec2 d = Normalized(b - a);
  double lo = 0, hi = 0;
  for (const Point2& p : points) {
    const double s = Dot(p - a, d);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return {a + lo * d, a + hi * d};
}

}  // namespace

std::string RenderFigure(const CenterReport& r) {
  const Triangle& t = r.triangle;
  double min_x = INFINITY, min_y = INFINITY, max_x = -INFINITY,
         max_y = -INFINITY;
  auto include = [&](const Point2& c, double radius) {
    min_x = std::min(min_x, c[0] - radius);
    max_x = std::max(max_x, c[0] + radius);
    min_y = std::min(min_y, c[1] - radius);
    max_y = std::max(max_y, c[1] + radius);
  };
  for (Vertex v : {Vertex::kA, Vertex::kB, Vertex::kC}) {
    include(r.circles[v].center(), r.circles[v].radius());
  }
  const double scale = t.Scale();
  const auto outer = r.soddy.OuterSphere();
  // A modest outer circle is framed in full; a huge one is left to clip.
  if (outer && outer->radius() < 2.0 * scale) {
    include(outer->center(), outer->radius());
  }
  for (const Point2& p : r.soddy_tangencies.outer) include(p, 0);
  include(r.M_prime, 0);
  const double margin = 0.05 * std::max(max_x - min_x, max_y - min_y);
  min_x -= margin;
  min_y -= margin;
  max_x += margin;
  max_y += margin;

  SvgWriter svg(min_x, min_y, max_x, max_y);
  const double stroke = 0.004 * std::max(max_x - min_x, max_y - min_y);

  svg.Polygon(t.vertices(), "triangle");
  for (Vertex v : {Vertex::kA, Vertex::kB, Vertex::kC}) {
    svg.Circle(r.circles[v].center(), r.circles[v].radius(), "vertex-circle");
  }
  svg.Circle(r.soddy.inner.center(), r.soddy.inner.radius(), "soddy-inner");
  if (outer) {
    svg.Circle(outer->center(), outer->radius(), "soddy-outer");
  } else {
    const Line2 line = r.soddy.outer.AsLine();
    const Point2 mid = line.ClosestPoint(
        Point2{(min_x + max_x) / 2.0, (min_y + max_y) / 2.0});
    const double reach = max_x - min_x + max_y - min_y;
    svg.Segment(mid - reach * line.direction(), mid + reach * line.direction(),
                "soddy-outer");
  }

  for (Vertex v : {Vertex::kA, Vertex::kB, Vertex::kC}) {
    const Point2& contact = r.contacts.Opposite(v);
    const auto [p, q] =
        Span(r.soddy_tangencies.Inner(v), contact,
             {r.soddy_tangencies.Inner(v), contact, r.M});
    svg.Segment(p, q, "concurrency-line");
    const auto [pp, qp] =
        Span(r.soddy_tangencies.Outer(v), contact,
             {r.soddy_tangencies.Outer(v), contact, r.M_prime});
    svg.Segment(pp, qp, "concurrency-line-prime");
  }

  const double marker = 0.006 * std::max(max_x - min_x, max_y - min_y);
  svg.Marker(r.M, "M", marker);
  svg.Marker(r.M_prime, "M&#8242;", marker);
  return svg.Finish(stroke);
}

}  // namespace tcenters
