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

#ifndef TCENTERS_TANGENCY_H_
#define TCENTERS_TANGENCY_H_

#include <array>
#include <cstdint>
#include <optional>

#include "tcenters/geom_core.h"
#include "tcenters/vec.h"

namespace tcenters {

// Whether a sphere sits outside its tangent partners or wraps around them.
enum class Orientation { kExternal, kContaining };

template <int N>
class Sphere {
 public:
  // Throws kInvalidArgument unless radius is finite and positive.
  Sphere(const Vec<N>& center, double radius,
         Orientation orientation = Orientation::kExternal);

  const Vec<N>& center() const { return center_; }
  double radius() const { return radius_; }
  Orientation orientation() const { return orientation_; }
  bool containing() const { return orientation_ == Orientation::kContaining; }

 private:
  Vec<N> center_;
  double radius_;
  Orientation orientation_;
};

using Sphere2 = Sphere<2>;
using Sphere3 = Sphere<3>;

// 1/r for an external sphere, -1/r for one that contains its partners.
template <int N>
double SignedBend(const Sphere<N>& s) {
  return (s.containing() ? -1.0 : 1.0) / s.radius();
}

// Point where two tangent spheres touch: the bend-weighted average of the
// centers. Throws kNotTangent when the orientation flags disagree with the
// geometry and kDegenerateBendSum when the bends cancel.
template <int N>
Vec<N> TangencyPoint(const Sphere<N>& si, const Sphere<N>& sj,
                     double rel_tol = kDefaultTolerance);

// One way of splitting four spheres into two pairs: (first[0], first[1]) and
// (second[0], second[1]).
struct OppositePair {
  std::array<int, 2> first;
  std::array<int, 2> second;
};

inline constexpr std::array<OppositePair, 3> kOppositePairs{{
    {{0, 1}, {2, 3}},
    {{0, 2}, {1, 3}},
    {{0, 3}, {1, 2}},
}};

// Four mutually tangent spheres, validated on construction.
//
// In the generic case at most one sphere is kContaining and it contains the
// other three. The only other accepted configuration is the pencil in which
// all four spheres touch at one shared point; containment is then mixed and
// the orientation flags are not checked against it.
template <int N>
class TangentQuadruple {
 public:
  // Throws kNotTangent if some pair does not touch, or if the flags disagree
  // with the geometry outside the shared-point case.
  explicit TangentQuadruple(const std::array<Sphere<N>, 4>& spheres,
                            double rel_tol = kDefaultTolerance);

  const std::array<Sphere<N>, 4>& spheres() const { return spheres_; }
  const Sphere<N>& operator[](int i) const { return spheres_[i]; }

  const Vec<N>& tangency(int i, int j) const { return tangency_[i][j]; }
  bool has_common_tangency() const { return common_tangency_; }

  // Bounding diagonal of the six tangency points (the largest radius when
  // they all coincide).
  double scale() const { return scale_; }

 private:
  std::array<Sphere<N>, 4> spheres_;
  std::array<std::array<Vec<N>, 4>, 4> tangency_{};
  bool common_tangency_ = false;
  double scale_ = 0;
};

using TangentQuadruple2 = TangentQuadruple<2>;
using TangentQuadruple3 = TangentQuadruple<3>;

// sum(R_i x_i) / sum(R_i) with signed bends R_i.
template <int N>
Vec<N> WeightedCenter(const TangentQuadruple<N>& q,
                      double rel_tol = kDefaultTolerance);

// One line per entry of kOppositePairs, through that pair's two tangencies.
// Throws kCoincidentTangencies when the two points of a pair coincide.
template <int N>
std::array<Line<N>, 3> OppositeTangencyLines(const TangentQuadruple<N>& q,
                                             double rel_tol = kDefaultTolerance);

template <int N>
struct CoincidenceReport {
  Vec<N> point;
  // Relative to q.scale().
  double residual = 0;
  // Absent in the shared-tangency case, where the lines are undefined.
  std::optional<Vec<N>> weighted_center;
  // |point - weighted_center| / q.scale().
  double center_deviation = 0;
  bool common_tangency = false;
};

// Concurrency of the three opposite-tangency lines, compared against the
// weighted center. When all spheres share a tangency, that point is returned
// with zero residual.
template <int N>
CoincidenceReport<N> VerifyCoincidence(const TangentQuadruple<N>& q,
                                       double rel_tol = kDefaultTolerance);

// Proper rigid motion (rotation then translation), drawn from a seed.
template <int N>
class RigidMotion {
 public:
  // Uniform rotation; translation uniform in [-translation, translation]^N.
  static RigidMotion Random(std::uint64_t seed, double translation);

  Vec<N> Apply(const Vec<N>& p) const;
  Sphere<N> Apply(const Sphere<N>& s) const {
    return Sphere<N>(Apply(s.center()), s.radius(), s.orientation());
  }

 private:
  std::array<double, N * N> rotation_{};
  Vec<N> offset_;
};

// Places four spheres with the given radii so that every pair touches:
// sphere 0 at the origin, sphere 1 on +x, sphere 2 in the xy-plane, sphere 3
// by trilateration. Only sphere 3 may be containing. A seeded rigid motion is
// applied afterwards. In the plane the radii must be compatible; in space the
// mirror image is picked by the seed. Throws kUnrealizable when no placement
// exists.
template <int N>
TangentQuadruple<N> GenerateTangentSpheres(
    const std::array<double, 4>& radii, std::uint64_t seed,
    Orientation fourth = Orientation::kExternal,
    double rel_tol = kDefaultTolerance);

}  // namespace tcenters

#endif  // TCENTERS_TANGENCY_H_
