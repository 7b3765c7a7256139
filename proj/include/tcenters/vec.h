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

#ifndef TCENTERS_VEC_H_
#define TCENTERS_VEC_H_

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <span>

namespace tcenters {

// Fixed-dimension Cartesian vector. Used both for points and displacements.
template <int N>
struct Vec {
  static_assert(N == 2 || N == 3, "only planar and spatial vectors");

  std::array<double, N> c{};

  constexpr Vec() = default;
  constexpr Vec(double x, double y)
    requires(N == 2)
      : c{x, y} {}
  constexpr Vec(double x, double y, double z)
    requires(N == 3)
      : c{x, y, z} {}

  constexpr double& operator[](int i) { return c[i]; }
  constexpr double operator[](int i) const { return c[i]; }
  constexpr double x() const { return c[0]; }
  constexpr double y() const { return c[1]; }
  constexpr double z() const
    requires(N == 3)
  {
    return c[2];
  }

  constexpr Vec& operator+=(const Vec& o) {
    for (int i = 0; i < N; ++i) c[i] += o.c[i];
    return *this;
  }
  constexpr Vec& operator-=(const Vec& o) {
    for (int i = 0; i < N; ++i) c[i] -= o.c[i];
    return *this;
  }
  constexpr Vec& operator*=(double s) {
    for (auto& v : c) v *= s;
    return *this;
  }
  constexpr Vec& operator/=(double s) {
    for (auto& v : c) v /= s;
    return *this;
  }

  friend constexpr Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend constexpr Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend constexpr Vec operator-(Vec a) { return a *= -1.0; }
  friend constexpr Vec operator*(Vec a, double s) { return a *= s; }
  friend constexpr Vec operator*(double s, Vec a) { return a *= s; }
  friend constexpr Vec operator/(Vec a, double s) { return a /= s; }
  friend constexpr bool operator==(const Vec&, const Vec&) = default;
};

using Vec2 = Vec<2>;
using Vec3 = Vec<3>;
using Point2 = Vec<2>;
using Point3 = Vec<3>;

template <int N>
constexpr double Dot(const Vec<N>& a, const Vec<N>& b) {
  double s = 0;
  for (int i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}

template <int N>
double Norm(const Vec<N>& a) {
  if constexpr (N == 2) {
    return std::hypot(a[0], a[1]);
  } else {
    return std::hypot(a[0], a[1], a[2]);
  }
}

template <int N>
double Distance(const Vec<N>& a, const Vec<N>& b) {
  return Norm(a - b);
}

template <int N>
Vec<N> Normalized(const Vec<N>& a) {
  return a / Norm(a);
}

template <int N>
bool IsFinite(const Vec<N>& a) {
  return std::all_of(a.c.begin(), a.c.end(),
                     [](double v) { return std::isfinite(v); });
}

// z-component of the planar cross product.
constexpr double Cross(const Vec2& a, const Vec2& b) {
  return a[0] * b[1] - a[1] * b[0];
}

constexpr Vec3 Cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

// Counter-clockwise quarter turn.
constexpr Vec2 Perp(const Vec2& a) { return {-a[1], a[0]}; }

constexpr Vec3 Lift(const Vec2& a) { return {a[0], a[1], 0.0}; }

// Diagonal of the axis-aligned bounding box. This is the configuration scale
// every relative tolerance in the library is measured against.
template <int N>
double BoundingDiagonal(std::span<const Vec<N>> points) {
  if (points.empty()) return 0.0;
  Vec<N> lo = points.front();
  Vec<N> hi = points.front();
  for (const auto& p : points) {
    for (int i = 0; i < N; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  }
  return Norm(hi - lo);
}

template <int N>
double BoundingDiagonal(std::initializer_list<Vec<N>> points) {
  return BoundingDiagonal(std::span<const Vec<N>>(points.begin(), points.size()));
}

}  // namespace tcenters

#endif  // TCENTERS_VEC_H_
