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

#ifndef TCENTERS_CLI_REPORT_H_
#define TCENTERS_CLI_REPORT_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tcenters/centers.h"
#include "tcenters/suites.h"
#include "tcenters/tangency.h"

namespace tcenters {

enum class OutputFormat { kJson, kCsv, kSvg };

enum class InputMode { kVertices, kSides };

struct RunConfig {
  InputMode input_mode = InputMode::kVertices;
  std::vector<double> values;
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 0;
  int trials = 1000;
  OutputFormat format = OutputFormat::kJson;
  // Empty means standard output.
  std::string out_path;
};

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitBadInput = 2;

// Builds the triangle described by `config`; throws kDegenerateTriangle or
// kInvalidArgument.
Triangle TriangleFromConfig(const RunConfig& config);

std::string ReportToJson(const CenterReport& report, InputMode mode);
std::string ReportToCsv(const CenterReport& report);

// SVG with the triangle, vertex circles, both Soddy circles (or the tangent
// line), the concurrent lines through M and M', and center markers. The
// y-axis points up.
std::string RenderFigure(const CenterReport& report);

std::string SuitesToText(const std::vector<SuiteResult>& suites);
std::string SuitesToJson(const std::vector<SuiteResult>& suites);

// Reads four spheres, one per line as `x y z r [contains]`. Blank lines and
// text after `#` are ignored. Throws kInvalidArgument on malformed input.
std::array<Sphere3, 4> ParseSpheres(std::istream& in);

// Entry point behind the `tcenters` binary. Subcommands: centers, figure,
// verify, spheres3d.
int RunCommand(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err);

}  // namespace tcenters

#endif  // TCENTERS_CLI_REPORT_H_
