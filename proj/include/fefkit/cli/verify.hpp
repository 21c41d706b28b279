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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fefkit::cli {

struct PropertyCheck {
  std::string name;
  bool passed = false;
  double worst = 0.0;  // largest violation (or error) seen
  std::string detail;
};

/// Suites: bounds, relations, mixtures, superposition, all. Throws
/// std::invalid_argument for an unknown suite, d outside [2, 6] or
/// samples < 1.
std::vector<PropertyCheck> run_verify_suite(std::string_view suite,
                                            std::size_t d, int samples,
                                            std::uint64_t seed);

}  // namespace fefkit::cli
