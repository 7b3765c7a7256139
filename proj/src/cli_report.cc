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

#include "tcenters/cli_report.h"

#include <climits>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"

namespace tcenters {

namespace {

using Json = nlohmann::ordered_json;

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Json ToJson(const Point2& p) { return Json::array({p[0], p[1]}); }

Json ToJson(const Sphere2& s) {
  return {{"center", ToJson(s.center())},
          {"radius", s.radius()},
          {"bend", SignedBend(s)}};
}

Json ToJson(const GeneralizedCircle& g) {
  if (g.is_line()) {
    return {{"line", {{"normal", ToJson(g.normal())}, {"offset", g.line_offset()}}},
            {"bend", 0.0}};
  }
  return {{"center", ToJson(g.center())},
          {"radius", g.radius()},
          {"bend", g.bend()}};
}

Json ToJson(const CrossRatioValue& c) {
  Json j{{"status", CrossRatioStatusName(c.status)}};
  j["value"] = c.status == CrossRatioValue::Status::kOk ? Json(c.value)
                                                          : Json(nullptr);
  return j;
}

void PrintError(std::ostream& err, std::string_view code,
                const std::string& message) {
  err << Json{{"error", code}, {"message", message}}.dump() << "\n";
}

int WriteOutput(const RunConfig& config, const std::string& text,
                std::ostream& out, std::ostream& err) {
  if (config.out_path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(config.out_path, std::ios::binary);
  if (!file) {
    PrintError(err, "InvalidArgument", "cannot open " + config.out_path);
    return kExitBadInput;
  }
  file << text;
  return kExitOk;
}

}  // namespace

Triangle TriangleFromConfig(const RunConfig& config) {
  const std::vector<double>& v = config.values;
  if (config.input_mode == InputMode::kSides) {
    if (v.size() != 3) {
      throw GeometryError(ErrorCode::kInvalidArgument,
                          "--sides needs exactly three lengths");
    }
    return Triangle::FromSides(v[0], v[1], v[2], config.tolerance);
  }
  if (v.size() != 6) {
    throw GeometryError(ErrorCode::kInvalidArgument,
                        "--vertices needs exactly six coordinates");
  }
  return Triangle::FromVertices({v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]},
                                config.tolerance);
}

std::string ReportToJson(const CenterReport& r, InputMode mode) {
  const Triangle& t = r.triangle;
  Json j;
  j["triangle"] = {
      {"input", mode == InputMode::kSides ? "sides" : "vertices"},
      {"placement", mode == InputMode::kSides
                        ? "C at origin, B on +x axis, A in upper half-plane"
                        : "as given"},
      {"vertices", {{"A", ToJson(t.A())}, {"B", ToJson(t.B())}, {"C", ToJson(t.C())}}},
      {"sides", {{"a", t.a()}, {"b", t.b()}, {"c", t.c()}}}};
  j["circles"] = {{"A", ToJson(r.circles.A)},
                  {"B", ToJson(r.circles.B)},
                  {"C", ToJson(r.circles.C)}};
  j["contacts"] = {{"BC", ToJson(r.contacts.BC)},
                   {"AC", ToJson(r.contacts.AC)},
                   {"AB", ToJson(r.contacts.AB)}};
  j["soddy"] = {{"inner", ToJson(r.soddy.inner)},
                {"outer", ToJson(r.soddy.outer)},
                {"outer_class", OuterClassName(r.soddy.outer_class)}};
  Json centers{{"M", ToJson(r.M)}, {"M_prime", ToJson(r.M_prime)},
               {"S", ToJson(r.S)}};
  centers["S_prime"] = r.S_prime ? ToJson(*r.S_prime) : ToJson(r.soddy.outer);
  centers["Ge"] = ToJson(r.Ge);
  centers["I"] = ToJson(r.I);
  j["centers"] = centers;
  j["soddy_line_direction"] = r.soddy_line_direction
                                  ? ToJson(*r.soddy_line_direction)
                                  : Json(nullptr);
  Json residuals = Json::object();
  for (const auto& [name, value] : r.residuals) residuals[name] = value;
  j["residuals"] = residuals;
  j["cross_ratios"] = {{"M_M_prime_Ge_I", ToJson(r.cross_ratio_MMp)},
                       {"S_S_prime_Ge_I", ToJson(r.cross_ratio_SSp)}};
  Json trilinears = Json::object();
  for (const auto& [name, tri] : r.trilinears) {
    trilinears[name] = {{"normalized", tri.normalized},
                        {"distances", tri.distances}};
  }
  j["trilinears"] = trilinears;
  return j.dump(2) + "\n";
}

std::string ReportToCsv(const CenterReport& r) {
  std::ostringstream os;
  os << "section,name,v0,v1,v2\n";
  auto point = [&](std::string_view section, std::string_view name,
                   const Point2& p) {
    os << section << "," << name << "," << Fmt(p[0]) << "," << Fmt(p[1])
       << ",\n";
  };
  auto circle = [&](std::string_view section, std::string_view name,
                    const GeneralizedCircle& g) {
    if (g.is_line()) {
      os << section << "," << name << "_line," << Fmt(g.normal()[0]) << ","
         << Fmt(g.normal()[1]) << "," << Fmt(g.line_offset()) << "\n";
    } else {
      os << section << "," << name << "," << Fmt(g.center()[0]) << ","
         << Fmt(g.center()[1]) << "," << Fmt(g.radius()) << "\n";
    }
  };
  const Triangle& t = r.triangle;
  point("vertex", "A", t.A());
  point("vertex", "B", t.B());
  point("vertex", "C", t.C());
  circle("circle", "A", GeneralizedCircle::Circle(r.circles.A.center(), r.circles.A.radius()));
  circle("circle", "B", GeneralizedCircle::Circle(r.circles.B.center(), r.circles.B.radius()));
  circle("circle", "C", GeneralizedCircle::Circle(r.circles.C.center(), r.circles.C.radius()));
  circle("soddy", "inner",
         GeneralizedCircle::Circle(r.soddy.inner.center(), r.soddy.inner.radius()));
  circle("soddy", "outer", r.soddy.outer);
  os << "soddy,outer_class," << OuterClassName(r.soddy.outer_class) << ",,\n";
  point("center", "M", r.M);
  point("center", "M_prime", r.M_prime);
  point("center", "S", r.S);
  if (r.S_prime) point("center", "S_prime", *r.S_prime);
  point("center", "Ge", r.Ge);
  point("center", "I", r.I);
  for (const auto& [name, value] : r.residuals) {
    os << "residual," << name << "," << Fmt(value) << ",,\n";
  }
  auto ratio = [&](std::string_view name, const CrossRatioValue& c) {
    os << "cross_ratio," << name << ","
       << (c.status == CrossRatioValue::Status::kOk ? Fmt(c.value) : "")
       << "," << CrossRatioStatusName(c.status) << ",\n";
  };
  ratio("M_M_prime_Ge_I", r.cross_ratio_MMp);
  ratio("S_S_prime_Ge_I", r.cross_ratio_SSp);
  for (const auto& [name, tri] : r.trilinears) {
    os << "trilinear," << name << "," << Fmt(tri.normalized[0]) << ","
       << Fmt(tri.normalized[1]) << "," << Fmt(tri.normalized[2]) << "\n";
  }
  return os.str();
}

std::string SuitesToText(const std::vector<SuiteResult>& suites) {
  std::ostringstream os;
  bool all = true;
  for (const SuiteResult& s : suites) {
    os << s.name << ": trials=" << s.trials << " skipped=" << s.skipped
       << " failures=" << s.failures;
    for (const auto& [metric, value] : s.maxima) {
      char buf[96];
      const auto bound = s.bounds.find(metric);
      std::snprintf(buf, sizeof(buf), " max_%s=%.3e", metric.c_str(), value);
      os << buf;
      if (bound != s.bounds.end()) {
        std::snprintf(buf, sizeof(buf), "(<=%.0e)", bound->second);
        os << buf;
      }
    }
    for (const auto& [name, n] : s.counts) os << " " << name << "=" << n;
    os << (s.passed() ? " PASS" : " FAIL") << "\n";
    all = all && s.passed();
  }
  os << (all ? "all suites passed" : "verification FAILED") << "\n";
  return os.str();
}

std::string SuitesToJson(const std::vector<SuiteResult>& suites) {
  Json arr = Json::array();
  bool all = true;
  for (const SuiteResult& s : suites) {
    Json maxima = Json::object();
    for (const auto& [metric, value] : s.maxima) {
      maxima[metric] = {{"max", value}, {"bound", s.bounds.count(metric) ? Json(s.bounds.at(metric)) : Json(nullptr)}};
    }
    Json counts = Json::object();
    for (const auto& [name, n] : s.counts) counts[name] = n;
    arr.push_back({{"name", s.name},
                   {"trials", s.trials},
                   {"skipped", s.skipped},
                   {"failures", s.failures},
                   {"metrics", maxima},
                   {"counts", counts},
                   {"passed", s.passed()}});
    all = all && s.passed();
  }
  return Json{{"suites", arr}, {"passed", all}}.dump(2) + "\n";
}

std::array<Sphere3, 4> ParseSpheres(std::istream& in) {
  std::vector<Sphere3> spheres;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    auto fail = [&](const std::string& why) {
      return GeometryError(ErrorCode::kInvalidArgument,
                           "line " + std::to_string(line_no) + ": " + why);
    };
    if (tokens.size() != 4 && tokens.size() != 5) {
      throw fail("expected `x y z r [contains]`");
    }
    std::array<double, 4> v;
    for (int i = 0; i < 4; ++i) {
      size_t used = 0;
      try {
        v[i] = std::stod(tokens[i], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tokens[i].size()) throw fail("bad number `" + tokens[i] + "`");
    }
    Orientation orientation = Orientation::kExternal;
    if (tokens.size() == 5) {
      if (tokens[4] != "contains") throw fail("unknown flag `" + tokens[4] + "`");
      orientation = Orientation::kContaining;
    }
    spheres.emplace_back(Vec3{v[0], v[1], v[2]}, v[3], orientation);
  }
  if (spheres.size() != 4) {
    throw GeometryError(ErrorCode::kInvalidArgument,
                        "expected four spheres, found " +
                            std::to_string(spheres.size()));
  }
  return {spheres[0], spheres[1], spheres[2], spheres[3]};
}

int RunCommand(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Triangle centers from mutually tangent circles", "tcenters"};
  app.require_subcommand(1);

  RunConfig config;
  std::vector<double> vertices;
  std::vector<double> sides;
  std::string format = "json";
  std::string sphere_file;

  auto add_common = [&](CLI::App* sub) {
    auto* v = sub->add_option("--vertices", vertices, "x1,y1,x2,y2,x3,y3")
                  ->delimiter(',')
                  ->allow_extra_args(false);
    auto* s = sub->add_option("--sides", sides, "a,b,c")
                  ->delimiter(',')
                  ->allow_extra_args(false);
    v->excludes(s);
    sub->add_option("--tolerance", config.tolerance, "relative tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", config.seed, "random seed");
    sub->add_option("--trials", config.trials, "trials per suite")
        ->check(CLI::Range(1, INT_MAX));
    sub->add_option("--format", format, "json|csv|svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}));
    sub->add_option("--out", config.out_path, "output path (default stdout)");
  };

  CLI::App* centers = app.add_subcommand("centers", "report every center");
  add_common(centers);
  CLI::App* figure = app.add_subcommand("figure", "draw the configuration");
  add_common(figure);
  CLI::App* verify = app.add_subcommand("verify", "run randomized checks");
  add_common(verify);
  CLI::App* spheres = app.add_subcommand(
      "spheres3d", "check one quadruple of tangent spheres from a file");
  add_common(spheres);
  spheres->add_option("file", sphere_file, "x y z r [contains] per line")
      ->required();

  for (CLI::App* sub : {centers, figure}) {
    sub->callback([sub]() {
      if (sub->count("--vertices") + sub->count("--sides") == 0) {
        throw CLI::RequiredError("--vertices or --sides");
      }
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    PrintError(err, "InvalidArgument", e.what());
    return kExitBadInput;
  }

  config.format = format == "csv"   ? OutputFormat::kCsv
                  : format == "svg" ? OutputFormat::kSvg
                                    : OutputFormat::kJson;
  if (!sides.empty()) {
    config.input_mode = InputMode::kSides;
    config.values = sides;
  } else {
    config.input_mode = InputMode::kVertices;
    config.values = vertices;
  }

  try {
    if (*centers || *figure) {
      const Triangle t = TriangleFromConfig(config);
      const CenterReport report = SoddyLineReport(t, config.tolerance);
      std::string text;
      if (*figure || config.format == OutputFormat::kSvg) {
        text = RenderFigure(report);
      } else if (config.format == OutputFormat::kCsv) {
        text = ReportToCsv(report);
      } else {
        text = ReportToJson(report, config.input_mode);
      }
      return WriteOutput(config, text, out, err);
    }

    if (*verify) {
      const auto suites = RunAllSuites(config.trials, config.seed);
      const std::string text = config.format == OutputFormat::kJson &&
                                       verify->count("--format") > 0
                                   ? SuitesToJson(suites)
                                   : SuitesToText(suites);
      if (const int rc = WriteOutput(config, text, out, err); rc != kExitOk) {
        return rc;
      }
      for (const auto& s : suites) {
        if (!s.passed()) return kExitVerificationFailed;
      }
      return kExitOk;
    }

    std::ifstream in(sphere_file);
    if (!in) {
      PrintError(err, "InvalidArgument", "cannot read " + sphere_file);
      return kExitBadInput;
    }
    const TangentQuadruple3 q(ParseSpheres(in), config.tolerance);
    const CoincidenceReport<3> c = VerifyCoincidence(q, config.tolerance);
    const double bound = std::max(1e-8, config.tolerance);
    const bool ok = c.residual <= bound && c.center_deviation <= bound;

    Json j;
    Json spheres_json = Json::array();
    for (const Sphere3& s : q.spheres()) {
      spheres_json.push_back(
          {{"center", {s.center()[0], s.center()[1], s.center()[2]}},
           {"radius", s.radius()},
           {"bend", SignedBend(s)}});
    }
    j["spheres"] = spheres_json;
    j["common_tangency"] = c.common_tangency;
    j["concurrency_point"] = {c.point[0], c.point[1], c.point[2]};
    j["residual"] = c.residual;
    if (c.weighted_center) {
      const Vec3& w = *c.weighted_center;
      j["weighted_center"] = {w[0], w[1], w[2]};
    } else {
      j["weighted_center"] = nullptr;
    }
    j["center_deviation"] = c.center_deviation;
    j["bound"] = bound;
    j["passed"] = ok;
    if (const int rc = WriteOutput(config, j.dump(2) + "\n", out, err);
        rc != kExitOk) {
      return rc;
    }
    return ok ? kExitOk : kExitVerificationFailed;
  } catch (const GeometryError& e) {
    PrintError(err, ErrorCodeName(e.code()), e.what());
    return kExitBadInput;
  }
}

}  // namespace tcenters
