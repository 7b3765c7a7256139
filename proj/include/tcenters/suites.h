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

#ifndef TCENTERS_SUITES_H_
#define TCENTERS_SUITES_H_

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "tcenters/tangency.h"
#include "tcenters/triangle.h"

namespace tcenters {

// Outcome of one randomized verification suite.
struct SuiteResult {
  std::string name;
  int trials = 0;
  // Trials that were drawn but not checked (e.g. condition limited).
  int skipped = 0;
  int failures = 0;
  // Largest observed value per metric, with the bound it is held to.
  std::map<std::string, double> maxima;
  std::map<std::string, double> bounds;
  // Free-form counters, e.g. how many outer circles were containing.
  std::map<std::string, int> counts;

  bool passed() const { return trials > 0 && failures == 0; }
  void Observe(const std::string& metric, double value);
};

// Per-trial seed derived from the suite seed; trials are independent.
std::uint64_t TrialSeed(std::uint64_t seed, std::uint64_t trial);

// Random non-degenerate triangle at a random scale and position: vertices
// in a square, twice the area over the squared longest side at least 0.02.
Triangle RandomTriangle(std::mt19937_64& rng);

// Triangle close to the tangent-line case: vertices (-1,0), (1,0),
// (0,-3/4 + delta) with |delta| in [1e-8, 1e-3], under a random similarity.
Triangle NearTangentLineTriangle(std::mt19937_64& rng);

// Random quadruple of mutually tangent spheres in space. Mixes external
// quadruples, quadruples inside an enclosing sphere, and planar
// configurations with a containing outer Soddy circle lifted into space.
TangentQuadruple3 RandomSphereQuadruple(std::uint64_t seed);

// Opposite-tangency concurrency in space, checked against the weighted
// center. Bounds 1e-8 relative.
SuiteResult RunSphereConcurrencySuite(int trials, std::uint64_t seed);

// The same in the plane, for both Soddy quadruples of random triangles.
SuiteResult RunCircleConcurrencySuite(int trials, std::uint64_t seed);

// M, M', S, S' collinear with Ge and I, with cross-ratios -1.
SuiteResult RunHarmonicSuite(int trials, std::uint64_t seed);

// Altitude, tangency chord and vertex circle meet, for every vertex.
SuiteResult RunAltitudeWitnessSuite(int trials, std::uint64_t seed);

// Independent routes agree: inversion vs. Descartes inner circle, weighted
// vs. cevian Gergonne point, concurrency vs. weighted-average M and M'.
SuiteResult RunDualPathSuite(int trials, std::uint64_t seed);

std::vector<SuiteResult> RunAllSuites(int trials, std::uint64_t seed);

}  // namespace tcenters

#endif  // TCENTERS_SUITES_H_
