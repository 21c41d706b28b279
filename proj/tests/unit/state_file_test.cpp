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

#include "fefkit/cli/state_file.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <algorithm>
#include <limits>

#include "fefkit/linalg.hpp"

namespace fefkit::cli {
namespace {

std::string ParseError(std::string_view text) {
  try {
    parse_state(text);
  } catch (const StateFileError& e) {
    return e.what();
  }
  return "";
}

TEST(ParseState, PureBell) {
  const ParsedState s = parse_state(R"({"d": 2, "kind": "pure",
    "data": [[0.7071067811865476, 0], [0, 0], [0, 0], [0.7071067811865476, 0]]})");
  ASSERT_TRUE(std::holds_alternative<PureState>(s));
  const PureState& psi = std::get<PureState>(s);
  EXPECT_EQ(psi.d(), 2u);
  EXPECT_NEAR(std::abs(psi.amplitudes()[3]), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(ParseState, Density) {
  const ParsedState s = parse_state(R"({"d": 2, "kind": "density", "data": [
    [[0.5, 0], [0, 0], [0, 0], [0, 0]],
    [[0, 0], [0, 0], [0, 0], [0, 0]],
    [[0, 0], [0, 0], [0, 0], [0, 0]],
    [[0, 0], [0, 0], [0, 0], [0.5, 0]]]})");
  ASSERT_TRUE(std::holds_alternative<DensityMatrix>(s));
  EXPECT_EQ(std::get<DensityMatrix>(s).matrix()(3, 3), Complex(0.5));
}

TEST(ParseState, MalformedInputNamesField) {
  EXPECT_NE(ParseError("{\"d\": 2,").find("JSON"), std::string::npos);
  EXPECT_NE(ParseError(R"({"kind": "pure", "data": []})").find("d:"), std::string::npos);
  EXPECT_NE(ParseError(R"({"d": 2, "data": []})").find("kind"), std::string::npos);
  EXPECT_NE(ParseError(R"({"d": 2, "kind": "mixed", "data": []})").find("kind"),
            std::string::npos);
  EXPECT_NE(ParseError(R"({"d": 2, "kind": "pure"})").find("data"), std::string::npos);
  EXPECT_NE(ParseError(R"({"d": 1, "kind": "pure", "data": [[1, 0]]})").find("d:"),
            std::string::npos);
  EXPECT_NE(ParseError(R"({"d": 2, "kind": "pure", "data": [[1, 0], [0, 0], [0, 0]]})")
                .find("data"),
            std::string::npos);
  const std::string bad_pair =
      ParseError(R"({"d": 2, "kind": "pure", "data": [[1, 0], [0, 0], [0, 0], [0]]})");
  EXPECT_NE(bad_pair.find("data[3]"), std::string::npos) << bad_pair;
  const std::string bad_entry = ParseError(R"({"d": 2, "kind": "density", "data": [
    [[1, 0], [0, 0], [0, 0], [0, 0]],
    [[0, 0], [0, 0], [0, 0], [0, 0]],
    [[0, 0], [0, 0], "x", [0, 0]],
    [[0, 0], [0, 0], [0, 0], [0, 0]]]})");
  EXPECT_NE(bad_entry.find("data[2][2]"), std::string::npos) << bad_entry;
}

TEST(ParseState, ValidationReportsPosition) {
  const std::string msg = ParseError(R"({"d": 2, "kind": "density", "data": [
    [[0.5, 0], [0, 0], [0, 0], [0, 0]],
    [[0, 0], [0, 0], [0.3, 0], [0, 0]],
    [[0, 0], [0, 0], [0, 0], [0, 0]],
    [[0, 0], [0, 0], [0, 0], [0.5, 0]]]})");
  EXPECT_NE(msg.find("data:"), std::string::npos) << msg;
  EXPECT_TRUE(msg.find("(1,2)") != std::string::npos ||
              msg.find("(2,1)") != std::string::npos)
      << msg;
  const std::string norm =
      ParseError(R"({"d": 2, "kind": "pure", "data": [[1, 0], [1, 0], [0, 0], [0, 0]]})");
  EXPECT_NE(norm.find("data:"), std::string::npos) << norm;
}

TEST(Serialize, RoundTripIsExact) {
  Rng rng(17);
  for (std::size_t d : {2u, 3u, 4u}) {
    for (int t = 0; t < 10; ++t) {
      const PureState psi = random_pure(d, rng);
      const ParsedState back = parse_state(serialize_state(psi));
      ASSERT_TRUE(std::holds_alternative<PureState>(back));
      const auto got = std::get<PureState>(back).amplitudes();
      EXPECT_TRUE(std::equal(got.begin(), got.end(), psi.amplitudes().begin(),
                             psi.amplitudes().end()));

      const DensityMatrix rho = random_density(d, 1 + rng.below(d * d), rng);
      const ParsedState back2 = parse_state(serialize_state(rho));
      ASSERT_TRUE(std::holds_alternative<DensityMatrix>(back2));
      EXPECT_EQ(std::get<DensityMatrix>(back2).matrix(), rho.matrix());
    }
  }
}

TEST(Serialize, DeterministicText) {
  const PureState psi = random_pure(3, 5);
  EXPECT_EQ(serialize_state(psi), serialize_state(random_pure(3, 5)));
}

TEST(FormatDouble, SeventeenDigits) {
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  const double x = 1.0 / 3.0;
  EXPECT_EQ(std::stod(format_double(x)), x);
}

TEST(StateFileIo, WriteThenRead) {
  const auto path = std::filesystem::temp_directory_path() / "fefkit_state_file_test.json";
  const DensityMatrix rho = random_density(2, 3, 8);
  write_state_file(path, serialize_state(rho));
  const ParsedState back = read_state_file(path);
  EXPECT_EQ(std::get<DensityMatrix>(back).matrix(), rho.matrix());
  std::filesystem::remove(path);
  EXPECT_THROW(read_state_file(path), StateFileError);
  EXPECT_THROW(write_state_file("/nonexistent-dir/x.json", "{}"), StateFileError);
}

}  // namespace
}  // namespace fefkit::cli
