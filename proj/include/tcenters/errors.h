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

#ifndef TCENTERS_ERRORS_H_
#define TCENTERS_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace tcenters {

enum class ErrorCode {
  kParallelLines,
  kNotCollinear,
  kCoincidentPoints,
  kCenterImage,
  kNotTangent,
  kDegenerateBendSum,
  kCoincidentTangencies,
  kUnrealizable,
  kDegenerateTriangle,
  kNotMutuallyTangent,
  kNotExternal,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// All geometric preconditions that fail at runtime are reported through this
// exception; `code()` identifies which one.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tcenters

#endif  // TCENTERS_ERRORS_H_
