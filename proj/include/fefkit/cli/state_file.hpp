// Copyright 2026 The fefkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON state files:
//   {"d": 2, "kind": "pure",    "data": [[re, im], ...]}             (d^2 pairs)
//   {"d": 2, "kind": "density", "data": [[[re, im], ...], ...]}      (d^2 rows)
// Entries follow the composite index a * d + k. Numbers are written with 17
// significant digits, so a write/read cycle reproduces every double exactly.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "fefkit/states.hpp"

namespace fefkit::cli {

class StateFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ParsedState = std::variant<PureState, DensityMatrix>;

/// Throws StateFileError for malformed JSON or schema violations (the message
/// names the offending field) and for failed state validation.
ParsedState parse_state(std::string_view json_text);
ParsedState read_state_file(const std::filesystem::path& path);

std::string serialize_state(const PureState& psi);
std::string serialize_state(const DensityMatrix& rho);

/// Throws StateFileError if the file cannot be written.
void write_state_file(const std::filesystem::path& path,
                      const std::string& contents);

/// %.17g
std::string format_double(double x);

}  // namespace fefkit::cli
