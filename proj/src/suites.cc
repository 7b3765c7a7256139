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

#include "tcenters/suites.h"

#include <algorithm>
#include <cmath>

#include "tcenters/centers.h"
#include "tcenters/soddy.h"

namespace tcenters {

namespace {

double LogUniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

Triangle ApplySimilarity(std::mt19937_64& rng, const std::array<Point2, 3>& v) {
  const double scale = LogUniform(rng, 1e-2, 1e2);
  const RigidMotion<2> motion = RigidMotion<2>::Random(rng(), 5.0 * scale);
  return Triangle::FromVertices(motion.Apply(scale * v[0]),
                                motion.Apply(scale * v[1]),
                                motion.Apply(scale * v[2]));
}

}  // namespace

void SuiteResult::Observe(const std::string& metric, double value) {
  double& worst = maxima[metric];
  if (!(value <= worst)) worst = value;
  const auto bound = bounds.find(metric);
  if (bound != bounds.end() && !(value <= bound->second)) ++failures;
}

std::uint64_t TrialSeed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Triangle RandomTriangle(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    const std::array<Point2, 3> v{Point2{u(rng), u(rng)},
                                  Point2{u(rng), u(rng)},
                                  Point2{u(rng), u(rng)}};
    const double longest = std::max({Distance(v[0], v[1]),
                                     Distance(v[1], v[2]),
                                     Distance(v[2], v[0])});
    const double twice_area = std::abs(Cross(v[1] - v[0], v[2] - v[0]));
    if (twice_area / (longest * longest) >= 0.02) {
      return ApplySimilarity(rng, v);
    }
  }
}

Triangle NearTangentLineTriangle(std::mt19937_64& rng) {
  double delta = LogUniform(rng, 1e-8, 1e-3);
  if (rng() & 1u) delta = -delta;
  return ApplySimilarity(
      rng, {Point2{-1.0, 0.0}, Point2{1.0, 0.0}, Point2{0.0, -0.75 + delta}});
}

TangentQuadruple3 RandomSphereQuadruple(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int kind = static_cast<int>(rng() % 20);
  while (true) {
    try {
      if (kind < 14) {
        std::array<double, 4> radii;
        for (double& r : radii) r = LogUniform(rng, 0.1, 10.0);
        return GenerateTangentSpheres<3>(radii, rng());
      }
      if (kind < 17) {
        std::array<double, 4> radii;
        for (double& r : radii) r = LogUniform(rng, 0.1, 10.0);
        std::sort(radii.begin(), radii.end());
        return GenerateTangentSpheres<3>(radii, rng(),
                                         Orientation::kContaining);
      }
      const Triangle t = RandomTriangle(rng);
      const VertexCircles o = MakeVertexCircles(t);
      const SoddyPair pair = SoddyCircles(o);
      if (pair.outer_class != OuterClass::kContaining) continue;
      const Sphere2 outer = *pair.OuterSphere();
      const RigidMotion<3> motion = RigidMotion<3>::Random(rng(), t.Scale());
      auto lift = [&](const Sphere2& s) {
        return motion.Apply(
            Sphere3(Lift(s.center()), s.radius(), s.orientation()));
      };
      return TangentQuadruple3({lift(o.A), lift(o.B), lift(o.C), lift(outer)});
    } catch (const GeometryError& e) {
      if (e.code() != ErrorCode::kUnrealizable) throw;
    }
  }
}

SuiteResult RunSphereConcurrencySuite(int trials, std::uint64_t seed) {
  SuiteResult out;
  out.name = "sphere-concurrency";
  out.bounds = {{"residual", 1e-8}, {"center_deviation", 1e-8}};
  for (int i = 0; i < trials; ++i) {
    const TangentQuadruple3 q = RandomSphereQuadruple(TrialSeed(seed, i));
    const CoincidenceReport<3> r = VerifyCoincidence(q);
    out.Observe("residual", r.residual);
    out.Observe("center_deviation", r.center_deviation);
    const bool wraps = std::any_of(q.spheres().begin(), q.spheres().end(),
                                   [](const Sphere3& s) { return s.containing(); });
    ++out.counts[wraps ? "containing" : "external"];
    ++out.trials;
  }
  return out;
}

SuiteResult RunCircleConcurrencySuite(int trials, std::uint64_t seed) {
  SuiteResult out;
  out.name = "circle-concurrency";
  out.bounds = {{"residual", 1e-8}, {"center_deviation", 1e-8}};
  for (int i = 0; i < trials; ++i) {
    std::mt19937_64 rng(TrialSeed(seed, i));
    const Triangle t = RandomTriangle(rng);
    const VertexCircles o = MakeVertexCircles(t);
    const SoddyPair pair = SoddyCircles(o);
    std::vector<Sphere2> fourth{pair.inner};
    if (auto outer = pair.OuterSphere()) fourth.push_back(*outer);
    for (const Sphere2& s : fourth) {
      const CoincidenceReport<2> r =
          VerifyCoincidence(TangentQuadruple2({o.A, o.B, o.C, s}));
      out.Observe("residual", r.residual);
      out.Observe("center_deviation", r.center_deviation);
    }
    ++out.counts[std::string(OuterClassName(pair.outer_class))];
    ++out.trials;
  }
  return out;
}

SuiteResult RunHarmonicSuite(int trials, std::uint64_t seed) {
  SuiteResult out;
  out.name = "soddy-line-harmonic";
  out.bounds = {{"cross_ratio_MMp", 1e-7},
                {"cross_ratio_SSp", 1e-7},
                {"collinearity", 1e-8},
                {"decomposition", 1e-9}};
  for (int i = 0; i < trials; ++i) {
    std::mt19937_64 rng(TrialSeed(seed, i));
    const Triangle t = RandomTriangle(rng);
    const CenterReport r = SoddyLineReport(t);
    if (r.cross_ratio_MMp.status == CrossRatioValue::Status::kConditionLimited) {
      ++out.skipped;
      continue;
    }
    out.Observe("cross_ratio_MMp", std::abs(r.cross_ratio_MMp.value + 1.0));
    if (r.S_prime) {
      out.Observe("cross_ratio_SSp", std::abs(r.cross_ratio_SSp.value + 1.0));
    }
    out.Observe("collinearity", r.residuals.at("collinearity"));
    out.Observe("decomposition",
                std::max(r.residuals.at("decomposition_M"),
                         r.residuals.at("decomposition_M_prime")));
    ++out.trials;
  }
  return out;
}

SuiteResult RunAltitudeWitnessSuite(int trials, std::uint64_t seed) {
  SuiteResult out;
  out.name = "altitude-witness";
  out.bounds = {{"witness", 1e-8}};
  for (int i = 0; i < trials; ++i) {
    std::mt19937_64 rng(TrialSeed(seed, i));
    const Triangle t = RandomTriangle(rng);
    for (Vertex v : {Vertex::kA, Vertex::kB, Vertex::kC}) {
      const AltitudeWitness w = AltitudeCircleWitness(t, v);
      out.Observe("witness",
                  *std::max_element(w.residuals.begin(), w.residuals.end()));
    }
    ++out.trials;
  }
  return out;
}

SuiteResult RunDualPathSuite(int trials, std::uint64_t seed) {
  SuiteResult out;
  out.name = "dual-path";
  out.bounds = {{"inversion_vs_descartes", 1e-8},
                {"gergonne_paths", 1e-10},
                {"M_formula", 1e-9},
                {"M_prime_formula", 1e-9}};
  for (int i = 0; i < trials; ++i) {
    std::mt19937_64 rng(TrialSeed(seed, i));
    const bool near_line = i % 100 == 0;
    const Triangle t =
        near_line ? NearTangentLineTriangle(rng) : RandomTriangle(rng);
    const CenterReport r = SoddyLineReport(t);
    out.Observe("inversion_vs_descartes",
                r.residuals.at("inversion_dual_path"));
    out.Observe("gergonne_paths", r.residuals.at("Ge_dual_path"));
    out.Observe("M_formula", r.residuals.at("M_formula"));
    out.Observe("M_prime_formula", r.residuals.at("M_prime_formula"));
    ++out.counts[std::string(OuterClassName(r.soddy.outer_class))];
    if (near_line) ++out.counts["near_tangent_line"];
    ++out.trials;
  }
  return out;
}

std::vector<SuiteResult> RunAllSuites(int trials, std::uint64_t seed) {
  return {RunSphereConcurrencySuite(trials, seed),
          RunCircleConcurrencySuite(trials, seed),
          RunHarmonicSuite(trials, seed),
          RunAltitudeWitnessSuite(trials, seed),
          RunDualPathSuite(trials, seed)};
}

}  // namespace tcenters
