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


// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
//
// Usage: acceptance_test <path-to-tcenters-cli>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "tcenters/centers.h"
#include "tcenters/soddy.h"
#include "tcenters/suites.h"
#include "tcenters/triangle.h"
#include "tcenters/vec.h"

namespace tcenters {
namespace {

constexpr std::uint64_t kSeed = 20260415;

int failures = 0;

void Report(int id, bool ok, const std::string& what,
            const std::string& detail) {
  std::printf("criterion %d: %s  %s  [%s]\n", id, ok ? "PASS" : "FAIL",
              what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string Fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), format, args...);
  return buf;
}

std::string Maxima(const SuiteResult& s) {
  std::string out = Fmt("trials=%d skipped=%d failures=%d", s.trials,
                        s.skipped, s.failures);
  for (const auto& [name, value] : s.maxima) {
    out += Fmt(" %s=%.3g", name.c_str(), value);
  }
  return out;
}

struct OracleCircle {
  Point2 center;
  double signed_radius;
};

// Solves |x - c_i| = r_i + s. Differences of the squared equations give
// x = p + q s, and the first equation leaves a quadratic in s. Returns the
// circle for the smallest positive root and the circle for the other root.
std::array<OracleCircle, 2> DistanceEquationOracle(
    const std::array<Point2, 3>& c, const std::array<double, 3>& r) {
  double m[2][2], k0[2], k1[2];
  for (int i = 1; i <= 2; ++i) {
    m[i - 1][0] = 2 * (c[i][0] - c[0][0]);
    m[i - 1][1] = 2 * (c[i][1] - c[0][1]);
    k0[i - 1] = Dot(c[i], c[i]) - Dot(c[0], c[0]) - r[i] * r[i] + r[0] * r[0];
    k1[i - 1] = -2 * (r[i] - r[0]);
  }
  const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const Point2 p((k0[0] * m[1][1] - k0[1] * m[0][1]) / det,
                 (m[0][0] * k0[1] - m[1][0] * k0[0]) / det);
  const Vec2 q((k1[0] * m[1][1] - k1[1] * m[0][1]) / det,
               (m[0][0] * k1[1] - m[1][0] * k1[0]) / det);
  const Vec2 w = p - c[0];
  const double qa = Dot(q, q) - 1;
  const double qb = 2 * (Dot(w, q) - r[0]);
  const double qc = Dot(w, w) - r[0] * r[0];
  const double disc = std::sqrt(qb * qb - 4 * qa * qc);
  double s1 = (-qb + disc) / (2 * qa);
  double s2 = (-qb - disc) / (2 * qa);
  if (s2 > 0 && s2 < s1) std::swap(s1, s2);
  if (s1 < 0) std::swap(s1, s2);
  return {OracleCircle{p + s1 * q, s1}, OracleCircle{p + s2 * q, s2}};
}

// Intersection of lines p1q1 and p2q2 by Cramer's rule.
Point2 Meet(const Point2& p1, const Point2& q1, const Point2& p2,
            const Point2& q2) {
  const double a1 = q1[1] - p1[1], b1 = p1[0] - q1[0];
  const double c1 = a1 * p1[0] + b1 * p1[1];
  const double a2 = q2[1] - p2[1], b2 = p2[0] - q2[0];
  const double c2 = a2 * p2[0] + b2 * p2[1];
  const double det = a1 * b2 - a2 * b1;
  return Point2((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det);
}

Point2 Touch(const Point2& xi, double ki, const Point2& xj, double kj) {
  return (ki * xi + kj * xj) / (ki + kj);
}

void CheckSphereConcurrency() {
  const auto start = std::chrono::steady_clock::now();
  const SuiteResult s = RunSphereConcurrencySuite(10000, kSeed);
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  const bool containing = s.counts.count("containing") &&
                          s.counts.at("containing") > 0;
  Report(1, s.passed() && s.trials == 10000 && containing && seconds < 5.0,
         "10000 random tangent sphere quadruples meet at the weighted center",
         Maxima(s) + Fmt(" seconds=%.2f", seconds));
}

void CheckCircleConcurrency() {
  const SuiteResult s = RunCircleConcurrencySuite(1000, kSeed);
  Report(2, s.passed() && s.trials == 1000,
         "1000 random triangles, inner and outer circle quadruples concur",
         Maxima(s));
}

void CheckThreeFourFiveFixture() {
  const Triangle t =
      Triangle::FromVertices(Point2(0, 4), Point2(3, 0), Point2(0, 0));
  const std::array<double, 3> radii{3, 2, 1};
  const auto oracle = DistanceEquationOracle(t.vertices(), radii);
  const Point2 s = oracle[0].center, sp = oracle[1].center;
  const double ks = 1 / oracle[0].signed_radius;
  const double ksp = 1 / oracle[1].signed_radius;
  const ContactPoints k = MakeContactPoints(t);
  std::array<Point2, 3> in, out;
  for (int i = 0; i < 3; ++i) {
    in[i] = Touch(t.vertices()[i], 1 / radii[i], s, ks);
    out[i] = Touch(t.vertices()[i], 1 / radii[i], sp, ksp);
  }
  const Point2 m_oracle = Meet(in[0], k.BC, in[1], k.AC);
  const Point2 mp_oracle = Meet(out[0], k.BC, out[2], k.AB);
  const Point2 ge_oracle = Meet(t.A(), k.BC, t.B(), k.AC);

  const CenterReport r = SoddyLineReport(t);
  double worst = 0;
  const auto check = [&](const Point2& got, const Point2& oracle_value,
                         const Point2& expected) {
    worst = std::max({worst, Distance(got, expected),
                      Distance(oracle_value, expected)});
  };
  const auto scalar = [&](double got, double oracle_value, double expected) {
    worst = std::max({worst, std::abs(got - expected),
                      std::abs(oracle_value - expected)});
  };
  scalar(r.circles.A.radius(), radii[0], 3);
  scalar(r.circles.B.radius(), radii[1], 2);
  scalar(r.circles.C.radius(), radii[2], 1);
  check(r.S, s, Point2(21.0 / 23, 20.0 / 23));
  scalar(r.soddy.inner.radius(), oracle[0].signed_radius, 6.0 / 23);
  const bool containing = r.soddy.outer_class == OuterClass::kContaining &&
                          oracle[1].signed_radius < 0;
  check(r.soddy.outer.center(), sp, Point2(3, 4));
  scalar(r.soddy.outer.radius(), -oracle[1].signed_radius, 6);
  check(r.M, m_oracle, Point2(15.0 / 17, 14.0 / 17));
  check(r.M_prime, mp_oracle, Point2(0.6, 0.4));
  check(r.Ge, ge_oracle, Point2(9.0 / 11, 8.0 / 11));
  check(r.I, Incenter(t), Point2(1, 1));
  Report(3, containing && worst <= 1e-9,
         "3-4-5 triangle matches the distance-equation oracle and exact values",
         Fmt("max_abs_error=%.3g outer=%s", worst,
             std::string(OuterClassName(r.soddy.outer_class)).c_str()));
}

void CheckHarmonicRange() {
  const SuiteResult s = RunHarmonicSuite(1000, kSeed);
  Report(4, s.passed() && s.trials - s.skipped > 900,
         "(M, M'; Ge, I) and (S, S'; Ge, I) are harmonic on one line",
         Maxima(s));
}

void CheckAltitudeWitness() {
  const SuiteResult s = RunAltitudeWitnessSuite(1000, kSeed);
  const Triangle t =
      Triangle::FromVertices(Point2(0, 4), Point2(3, 0), Point2(0, 0));
  const double err =
      Distance(AltitudeCircleWitness(t, Vertex::kA).point, Point2(0, 7));
  Report(5, s.passed() && err <= 1e-9,
         "altitude, tangency chord and vertex circle share a point",
         Maxima(s) + Fmt(" witness_3_4_5_error=%.3g", err));
}

void CheckDualPath() {
  const SuiteResult s = RunDualPathSuite(1000, kSeed);
  Report(6, s.passed(),
         "inversion and Descartes paths agree; both Gergonne paths agree",
         Maxima(s));
}

void CheckTangentLine() {
  const Triangle t = Triangle::FromVertices(Point2(-1, 0), Point2(1, 0),
                                            Point2(0, -0.75));
  const CenterReport r = SoddyLineReport(t);
  const bool is_line = r.soddy.outer_class == OuterClass::kTangentLine &&
                       r.soddy.outer.is_line();
  double line_err = INFINITY;
  if (is_line) {
    // Both sample points of y = -1 must lie on the line.
    line_err = std::max(r.soddy.outer.DistanceTo(Point2(-10, -1)),
                        r.soddy.outer.DistanceTo(Point2(10, -1)));
  }
  const double mp_ge = Distance(r.M_prime, r.Ge);
  Report(7, is_line && line_err <= 1e-9 && mp_ge <= 1e-9,
         "radii (1,1,1/4): outer is the line y = -1 and M' = Ge",
         Fmt("outer=%s line_error=%.3g M'=(%.12g, %.12g) Ge=(%.12g, %.12g) "
             "|M'-Ge|=%.3g",
             std::string(OuterClassName(r.soddy.outer_class)).c_str(),
             line_err, r.M_prime[0], r.M_prime[1], r.Ge[0], r.Ge[1], mp_ge));
}

void CheckInvariance() {
  double perm = 0, sim = 0;
  for (int i = 0; i < 200; ++i) {
    std::mt19937_64 rng(TrialSeed(kSeed, i));
    const Triangle t = RandomTriangle(rng);
    const CenterReport base = SoddyLineReport(t);
    const auto& v = t.vertices();
    constexpr std::array<std::array<int, 3>, 5> kPerms{
        {{0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& p : kPerms) {
      const CenterReport r = SoddyLineReport(
          Triangle::FromVertices(v[p[0]], v[p[1]], v[p[2]]));
      perm = std::max({perm, Distance(r.M, base.M) / t.Scale(),
                       Distance(r.M_prime, base.M_prime) / t.Scale()});
    }
    std::uniform_real_distribution<double> u(-1, 1);
    const double scale = std::exp(3 * u(rng)), angle = 3.2 * u(rng);
    const bool mirror = i % 2 == 1;
    const Vec2 shift(100 * u(rng), 100 * u(rng));
    const auto f = [&](const Point2& p) {
      const double y = mirror ? -p[1] : p[1];
      return scale * Point2(std::cos(angle) * p[0] - std::sin(angle) * y,
                            std::sin(angle) * p[0] + std::cos(angle) * y) +
             shift;
    };
    const Triangle image = Triangle::FromVertices(f(v[0]), f(v[1]), f(v[2]));
    const CenterReport r = SoddyLineReport(image);
    std::vector<std::pair<Point2, Point2>> pairs{{r.M, base.M},
                                                 {r.M_prime, base.M_prime},
                                                 {r.S, base.S},
                                                 {r.Ge, base.Ge},
                                                 {r.I, base.I}};
    for (const auto& [got, orig] : pairs) {
      sim = std::max(sim, Distance(got, f(orig)) / image.Scale());
    }
    if (r.S_prime && base.S_prime) {
      const double reach = std::max(image.Scale(), Distance(*r.S_prime, r.S));
      sim = std::max(sim, Distance(*r.S_prime, f(*base.S_prime)) / reach);
    }
  }
  Report(8, perm <= 1e-10 && sim <= 1e-9,
         "vertex permutations fix M and M'; similarities commute with centers",
         Fmt("max_permutation=%.3g max_similarity=%.3g", perm, sim));
}

struct Captured {
  int exit_code;
  std::string output;
};

Captured RunCli(const std::string& cli) {
  const std::string cmd = "'" + cli + "' verify --trials 1000 --seed 42";
  Captured c{-1, ""};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return c;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    c.output.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  c.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

void CheckCliDeterminism(const char* cli) {
  if (cli == nullptr) {
    Report(9, false, "verify is deterministic and exits 0",
           "no CLI path given");
    return;
  }
  const Captured a = RunCli(cli);
  const Captured b = RunCli(cli);
  Report(9,
         a.exit_code == 0 && b.exit_code == 0 && a.output == b.output &&
             !a.output.empty(),
         "`verify --trials 1000 --seed 42` exits 0 with byte-identical output",
         Fmt("exit=%d,%d bytes=%zu,%zu identical=%s", a.exit_code, b.exit_code,
             a.output.size(), b.output.size(),
             a.output == b.output ? "yes" : "no"));
}

}  // namespace
}  // namespace tcenters

int main(int argc, char** argv) {
  using namespace tcenters;
  CheckSphereConcurrency();
  CheckCircleConcurrency();
  CheckThreeFourFiveFixture();
  CheckHarmonicRange();
  CheckAltitudeWitness();
  CheckDualPath();
  CheckTangentLine();
  CheckInvariance();
  CheckCliDeterminism(argc > 1 ? argv[1] : nullptr);
  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
