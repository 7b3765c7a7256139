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

#include "tcenters/centers.h"

#include <algorithm>
#include <cmath>
#include <vector>

namespace tcenters {

namespace {

// Everything derived from the vertex circles, computed once per triangle.
struct Configuration {
  VertexCircles circles;
  ContactPoints contacts;
  SoddyPair soddy;
  SoddyTangencies tangencies;
};

Configuration Configure(const Triangle& t, double rel_tol) {
  VertexCircles circles = MakeVertexCircles(t, rel_tol);
  ContactPoints contacts = MakeContactPoints(t, rel_tol);
  SoddyPair soddy = SoddyCircles(circles, rel_tol);
  SoddyTangencies tangencies = MakeSoddyTangencies(soddy, circles, rel_tol);
  return {circles, contacts, soddy, tangencies};
}

std::array<Line2, 3> OppositeLines(const Configuration& cfg,
                                   const std::array<Point2, 3>& fourth) {
  return {Line2::Through(fourth[0], cfg.contacts.BC),
          Line2::Through(fourth[1], cfg.contacts.AC),
          Line2::Through(fourth[2], cfg.contacts.AB)};
}

CenterEstimate InnerCenter(const Triangle& t, const Configuration& cfg,
                           double rel_tol) {
  const auto c = ConcurrencyPoint<2>(OppositeLines(cfg, cfg.tangencies.inner),
                                     rel_tol, t.Scale());
  const TangentQuadruple2 q(
      {cfg.circles.A, cfg.circles.B, cfg.circles.C, cfg.soddy.inner}, rel_tol);
  const Point2 formula = WeightedCenter(q, rel_tol);
  return {c.point, c.residual, formula,
          Distance(c.point, formula) / t.Scale()};
}

// sum(k_i x_i) / sum(k_i) over the vertex circles, with the outer line
// contributing its unit normal and no bend.
Point2 OuterWeightedCenter(const Configuration& cfg, double rel_tol) {
  if (const auto outer = cfg.soddy.OuterSphere()) {
    const TangentQuadruple2 q(
        {cfg.circles.A, cfg.circles.B, cfg.circles.C, *outer}, rel_tol);
    return WeightedCenter(q, rel_tol);
  }
  const Point2 origin = cfg.circles.C.center();
  Vec2 acc = cfg.soddy.outer.scaled_center();
  double bends = 0;
  for (const Sphere2* s : {&cfg.circles.A, &cfg.circles.B, &cfg.circles.C}) {
    const double k = SignedBend(*s);
    acc += k * (s->center() - origin);
    bends += k;
  }
  return origin + acc / bends;
}

CenterEstimate OuterCenter(const Triangle& t, const Configuration& cfg,
                           double rel_tol) {
  const auto c = ConcurrencyPoint<2>(OppositeLines(cfg, cfg.tangencies.outer),
                                     rel_tol, t.Scale());
  const Point2 formula = OuterWeightedCenter(cfg, rel_tol);
  return {c.point, c.residual, formula,
          Distance(c.point, formula) / t.Scale()};
}

// Residual of the lines from each vertex through its tangency on a Soddy
// circle meeting at that circle's center.
double CenterCevianResidual(const Triangle& t,
                            const std::array<Point2, 3>& tangencies,
                            const Point2& center, double rel_tol) {
  const std::array<Line2, 3> lines{Line2::Through(t.A(), tangencies[0]),
                                   Line2::Through(t.B(), tangencies[1]),
                                   Line2::Through(t.C(), tangencies[2])};
  const auto c = ConcurrencyPoint<2>(lines, rel_tol, t.Scale());
  return std::max(c.residual, Distance(c.point, center) / t.Scale());
}

SoddyCenterPoints CentersFrom(const Triangle& t, const Configuration& cfg,
                              double rel_tol) {
  SoddyCenterPoints out{cfg.soddy.inner.center(), 0, std::nullopt, 0,
                        cfg.soddy.outer};
  out.S_residual =
      CenterCevianResidual(t, cfg.tangencies.inner, out.S, rel_tol);
  if (!cfg.soddy.outer.is_line()) {
    out.S_prime = cfg.soddy.outer.center();
    out.S_prime_residual =
        CenterCevianResidual(t, cfg.tangencies.outer, *out.S_prime, rel_tol);
  }
  return out;
}

AltitudeWitness WitnessFrom(const Triangle& t, const Configuration& cfg,
                            Vertex v, double rel_tol) {
  const auto [u, w] = OtherVertices(v);
  const Point2& apex = t.vertex(v);
  const Line2 altitude(apex, Perp(t.vertex(w) - t.vertex(u)));
  const Line2 chord =
      Line2::Through(cfg.tangencies.Inner(v), cfg.contacts.Opposite(v));
  const double scale = t.Scale();
  Point2 p;
  if (std::abs(Cross(altitude.direction(), chord.direction())) < rel_tol &&
      altitude.DistanceTo(chord.anchor()) <= rel_tol * scale) {
    // Symmetric about this altitude: the chord is the altitude itself and
    // the witness is the far crossing with the vertex circle.
    Vec2 up = altitude.direction();
    if (Dot(up, apex - t.vertex(u)) < 0) up = -up;
    p = apex + cfg.circles[v].radius() * up;
  } else {
    p = IntersectLines(altitude, chord, rel_tol);
  }
  return {p,
          {altitude.DistanceTo(p) / scale, chord.DistanceTo(p) / scale,
           std::abs(Distance(p, apex) - cfg.circles[v].radius()) / scale}};
}

}  // namespace

CenterEstimate CenterM(const Triangle& t, double rel_tol) {
  return InnerCenter(t, Configure(t, rel_tol), rel_tol);
}

CenterEstimate CenterMPrime(const Triangle& t, double rel_tol) {
  return OuterCenter(t, Configure(t, rel_tol), rel_tol);
}

SoddyCenterPoints SoddyCenters(const Triangle& t, double rel_tol) {
  return CentersFrom(t, Configure(t, rel_tol), rel_tol);
}

AltitudeWitness AltitudeCircleWitness(const Triangle& t, Vertex v,
                                      double rel_tol) {
  return WitnessFrom(t, Configure(t, rel_tol), v, rel_tol);
}

Trilinears TrilinearCoords(const Triangle& t, const Point2& p) {
  const double orient = t.SignedArea() > 0 ? 1.0 : -1.0;
  Trilinears out;
  out.distances = {orient * Cross(t.C() - t.B(), p - t.B()) / t.a(),
                   orient * Cross(t.A() - t.C(), p - t.C()) / t.b(),
                   orient * Cross(t.B() - t.A(), p - t.A()) / t.c()};
  out.normalized = out.distances;
  const double alpha = out.distances[0];
  if (std::abs(alpha) > 1e-15 * t.Scale()) {
    for (double& d : out.normalized) d /= alpha;
  }
  return out;
}

std::string_view CrossRatioStatusName(CrossRatioValue::Status s) {
  switch (s) {
    case CrossRatioValue::Status::kOk:
      return "Ok";
    case CrossRatioValue::Status::kConditionLimited:
      return "ConditionLimited";
    case CrossRatioValue::Status::kDegenerate:
      return "Degenerate";
  }
  return "Unknown";
}

CenterReport SoddyLineReport(const Triangle& t, double rel_tol) {
  const Configuration cfg = Configure(t, rel_tol);
  const double scale = t.Scale();

  const CenterEstimate m = InnerCenter(t, cfg, rel_tol);
  const CenterEstimate mp = OuterCenter(t, cfg, rel_tol);
  const SoddyCenterPoints soddy_centers = CentersFrom(t, cfg, rel_tol);
  const Concurrency<2> ge_cevians = GergonneByCevians(t, rel_tol);

  CenterReport r{t,
                 cfg.circles,
                 cfg.contacts,
                 cfg.soddy,
                 cfg.tangencies,
                 m.point,
                 mp.point,
                 soddy_centers.S,
                 soddy_centers.S_prime,
                 GergonnePoint(t, rel_tol),
                 Incenter(t),
                 std::nullopt,
                 {},
                 {},
                 {},
                 {}};

  auto& res = r.residuals;
  res["M"] = m.residual;
  res["M_formula"] = m.formula_deviation;
  res["M_prime"] = mp.residual;
  res["M_prime_formula"] = mp.formula_deviation;
  res["S"] = soddy_centers.S_residual;
  if (r.S_prime) res["S_prime"] = soddy_centers.S_prime_residual;
  res["Ge"] = ge_cevians.residual;
  res["Ge_dual_path"] = Distance(ge_cevians.point, r.Ge) / scale;

  const double k_inner = SignedBend(cfg.soddy.inner);
  const double k_outer = cfg.soddy.outer.bend();
  const std::array<double, 3> k{SignedBend(cfg.circles.A),
                                SignedBend(cfg.circles.B),
                                SignedBend(cfg.circles.C)};
  const double k_abc = k[0] + k[1] + k[2];
  res["descartes_inner"] = DescartesDefect(k[0], k[1], k[2], k_inner);
  res["descartes_outer"] = DescartesDefect(k[0], k[1], k[2], k_outer);

  // M and M' as weighted averages of Ge and the Soddy centers.
  const Point2 m_split =
      r.Ge + (k_inner / (k_abc + k_inner)) * (r.S - r.Ge);
  res["decomposition_M"] = Distance(m_split, r.M) / scale;
  const Point2 mp_split =
      r.S_prime ? r.Ge + (k_outer / (k_abc + k_outer)) * (*r.S_prime - r.Ge)
                : r.Ge + cfg.soddy.outer.scaled_center() / k_abc;
  res["decomposition_M_prime"] = Distance(mp_split, r.M_prime) / scale;

  for (Vertex v : {Vertex::kA, Vertex::kB, Vertex::kC}) {
    const AltitudeWitness w = WitnessFrom(t, cfg, v, rel_tol);
    const std::string name =
        std::string("witness_") + "ABC"[static_cast<int>(v)];
    res[name] = *std::max_element(w.residuals.begin(), w.residuals.end());
  }

  const InversionConstruction inv = ConstructInnerSoddyByInversion(t, rel_tol);
  res["inversion_dual_path"] =
      std::max(Distance(inv.inner.center(), r.S),
               std::abs(inv.inner.radius() - cfg.soddy.inner.radius())) /
      scale;

  // Collinearity and harmonic ranges.
  std::vector<Point2> on_line{r.M, r.M_prime, r.S, r.Ge, r.I};
  if (r.S_prime) on_line.push_back(*r.S_prime);
  const bool condition_limited =
      Distance(r.Ge, r.I) < kConditionLimit * scale;
  Point2 from = r.Ge, to = r.I;
  if (condition_limited) {
    double widest = 0;
    for (size_t i = 0; i < on_line.size(); ++i) {
      for (size_t j = i + 1; j < on_line.size(); ++j) {
        if (const double d = Distance(on_line[i], on_line[j]); d > widest) {
          widest = d;
          from = on_line[i];
          to = on_line[j];
        }
      }
    }
  }
  double collinearity = 0;
  if (Distance(from, to) > kConditionLimit * scale) {
    const Line2 carrier = Line2::Through(from, to);
    r.soddy_line_direction = carrier.direction();
    for (const Point2& p : on_line) {
      collinearity = std::max(collinearity, carrier.DistanceTo(p) / scale);
    }
  }
  res["collinearity"] = collinearity;

  auto harmonic = [&](const Point2& p, const Point2& q) {
    CrossRatioValue out;
    if (condition_limited) {
      out.status = CrossRatioValue::Status::kConditionLimited;
      return out;
    }
    try {
      out.value = CrossRatio(p, q, r.Ge, r.I, kConditionLimit);
      out.status = CrossRatioValue::Status::kOk;
    } catch (const GeometryError&) {
      out.status = CrossRatioValue::Status::kDegenerate;
    }
    return out;
  };
  r.cross_ratio_MMp = harmonic(r.M, r.M_prime);
  if (r.S_prime) r.cross_ratio_SSp = harmonic(r.S, *r.S_prime);

  r.trilinears["M"] = TrilinearCoords(t, r.M);
  r.trilinears["M_prime"] = TrilinearCoords(t, r.M_prime);
  r.trilinears["S"] = TrilinearCoords(t, r.S);
  if (r.S_prime) r.trilinears["S_prime"] = TrilinearCoords(t, *r.S_prime);
  r.trilinears["Ge"] = TrilinearCoords(t, r.Ge);
  r.trilinears["I"] = TrilinearCoords(t, r.I);
  return r;
}

}  // namespace tcenters
