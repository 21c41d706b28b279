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

#include "fefkit/cli/commands.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <sys/wait.h>

#include "fefkit/cli/state_file.hpp"
#include "fefkit/cli/verify.hpp"
#include "fefkit/exact.hpp"
#include "fefkit/linalg.hpp"

namespace fefkit::cli {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("fefkit_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::map<std::string, std::string> ParseReport(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto colon = line.find(": ");
    if (colon != std::string::npos) kv[line.substr(0, colon)] = line.substr(colon + 2);
  }
  return kv;
}

std::vector<std::vector<std::string>> ParseCsv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

struct BinaryRun {
  int code = -1;
  std::string out;
  std::string err;
};

BinaryRun RunBinary(const std::string& args, const TempDir& dir) {
  const fs::path out = dir / "stdout.txt";
  const fs::path err = dir / "stderr.txt";
  const std::string cmd = std::string("\"") + FEF_BINARY + "\" " + args + " >\"" +
                          out.string() + "\" 2>\"" + err.string() + "\"";
  const int status = std::system(cmd.c_str());
  BinaryRun r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = Slurp(out);
  r.err = Slurp(err);
  return r;
}

TEST(DetectFamily, RecognizesConstructedMembers) {
  for (std::size_t d : {2u, 3u, 4u}) {
    const auto iso = detect_family(isotropic(d, 0.37));
    ASSERT_TRUE(iso.has_value());
    EXPECT_EQ(iso->family, Family::kIsotropic);
    EXPECT_NEAR(iso->f, 0.37, 1e-12);
    const auto wer = detect_family(werner(d, -0.6));
    ASSERT_TRUE(wer.has_value());
    EXPECT_EQ(wer->family, Family::kWerner);
    EXPECT_NEAR(wer->f, -0.6, 1e-12);
  }
  EXPECT_FALSE(detect_family(random_density(3, 2, 1)).has_value());
}

TEST(Compute, PureBell) {
  TempDir dir;
  const fs::path input = dir / "bell.json";
  write_state_file(input, serialize_state(max_entangled(2)));
  std::ostringstream out, err;
  ComputeOptions opts;
  opts.input = input.string();
  ASSERT_EQ(cmd_compute(opts, out, err), kExitOk) << err.str();
  auto kv = ParseReport(out.str());
  EXPECT_NEAR(std::stod(kv["fef_exact"]), 1.0, 1e-12);
  EXPECT_NEAR(std::stod(kv["fef_numeric"]), 1.0, 1e-9);
  EXPECT_EQ(kv["useful_for_teleportation"], "true");
  EXPECT_EQ(kv["kind"], "pure");
}

TEST(Compute, IsotropicFileUsesFamilyFormula) {
  TempDir dir;
  const fs::path input = dir / "iso.json";
  write_state_file(input, serialize_state(isotropic(3, 0.5)));
  std::ostringstream out, err;
  ComputeOptions opts;
  opts.input = input.string();
  opts.emit_unitary = true;
  ASSERT_EQ(cmd_compute(opts, out, err), kExitOk) << err.str();
  auto kv = ParseReport(out.str());
  EXPECT_NEAR(std::stod(kv["fef_exact"]), 0.5, 1e-12);
  EXPECT_NEAR(std::stod(kv["fef_numeric"]), 0.5, 1e-6);
  EXPECT_NE(kv["exact_method"].find("isotropic"), std::string::npos);
  EXPECT_FALSE(kv["optimal_unitary"].empty());
  EXPECT_EQ(kv["fef_range"], "[0.1111111111111111, 1]");
}

TEST(Compute, ExactOnUnrecognizedMixedStateExits3) {
  TempDir dir;
  const fs::path input = dir / "mixed.json";
  write_state_file(input, serialize_state(random_density(3, 2, 4)));
  std::ostringstream out, err;
  ComputeOptions opts;
  opts.input = input.string();
  opts.method = "exact";
  EXPECT_EQ(cmd_compute(opts, out, err), kExitNoClosedForm);
  opts.method = "both";
  std::ostringstream out2, err2;
  EXPECT_EQ(cmd_compute(opts, out2, err2), kExitOk);
  EXPECT_EQ(ParseReport(out2.str())["fef_exact"], "n/a");
}

TEST(Compute, InputErrorsExit2) {
  TempDir dir;
  const fs::path bad = dir / "bad.json";
  write_state_file(bad, R"({"d": 2, "kind": "pure", "data": [[1, 0], [0, 0], [0, 0]]})");
  std::ostringstream out, err;
  ComputeOptions opts;
  opts.input = bad.string();
  EXPECT_EQ(cmd_compute(opts, out, err), kExitInputError);
  EXPECT_NE(err.str().find("data"), std::string::npos);
  opts.input = (dir / "missing.json").string();
  EXPECT_EQ(cmd_compute(opts, out, err), kExitInputError);
}

TEST(Family, IsotropicRows) {
  std::ostringstream out, err;
  FamilyOptions opts;
  opts.family = "isotropic";
  opts.d = 2;
  ASSERT_EQ(cmd_family(opts, out, err), kExitOk) << err.str();
  const auto rows = ParseCsv(out.str());
  ASSERT_EQ(rows.size(), 12u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"f", "fef_exact", "fef_numeric", "abs_err",
                                                "teleport_fidelity", "useful"}));
  EXPECT_EQ(std::stod(rows[1][0]), 0.0);
  EXPECT_NEAR(std::stod(rows[1][1]), 1.0 / 3.0, 1e-15);
  EXPECT_EQ(std::stod(rows[11][0]), 1.0);
}

TEST(Family, WernerOddBranchRow) {
  std::ostringstream out, err;
  FamilyOptions opts;
  opts.family = "werner";
  opts.d = 3;
  opts.f_min = -1.0;
  opts.steps = 21;
  ASSERT_EQ(cmd_family(opts, out, err), kExitOk) << err.str();
  const auto rows = ParseCsv(out.str());
  ASSERT_EQ(rows.size(), 22u);
  EXPECT_EQ(std::stod(rows[1][0]), -1.0);
  EXPECT_NEAR(std::stod(rows[1][1]), 2.0 / 9.0, 1e-15);
}

TEST(Family, WernerQubitMatchesOptimizer) {
  std::ostringstream out, err;
  FamilyOptions opts;
  opts.family = "werner";
  opts.d = 2;
  opts.f_min = -1.0;
  opts.steps = 21;
  ASSERT_EQ(cmd_family(opts, out, err), kExitOk);
  const auto rows = ParseCsv(out.str());
  double worst = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) worst = std::max(worst, std::stod(rows[i][3]));
  EXPECT_LE(worst, 1e-6);
}

TEST(Family, OutOfDomainExits2) {
  std::ostringstream out, err;
  FamilyOptions opts;
  opts.family = "isotropic";
  opts.f_min = -0.5;
  EXPECT_EQ(cmd_family(opts, out, err), kExitInputError);
  opts.family = "bogus";
  opts.f_min = 0.0;
  EXPECT_EQ(cmd_family(opts, out, err), kExitInputError);
}

TEST(Verify, BoundsSuite) {
  const auto checks = run_verify_suite("bounds", 2, 100, 0);
  bool saw_mixed = false;
  for (const PropertyCheck& c : checks) {
    EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
    if (c.name.ends_with("maximally-mixed")) {
      saw_mixed = true;
      const auto eq = c.detail.find('=');
      ASSERT_NE(eq, std::string::npos) << c.detail;
      EXPECT_NEAR(std::stod(c.detail.substr(eq + 1)), 0.25, 1e-6) << c.detail;
    }
  }
  EXPECT_TRUE(saw_mixed);
}

TEST(Verify, RelationsNegativityIdentity) {
  for (const PropertyCheck& c : run_verify_suite("relations", 3, 50, 0)) {
    EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
    if (c.name.ends_with("negativity-identity")) EXPECT_LE(c.worst, 1e-9);
  }
}

TEST(Verify, MixturesSuite) {
  for (const PropertyCheck& c : run_verify_suite("mixtures", 3, 20, 0)) {
    EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
  }
}

TEST(Verify, SuperpositionBoundaryExamplesAndTriangleCore) {
  std::map<std::string, PropertyCheck> by_name;
  for (PropertyCheck& c : run_verify_suite("superposition", 2, 200, 0)) {
    by_name[c.name.substr(c.name.find('/') + 1)] = c;
  }
  EXPECT_TRUE(by_name.at("triangle-core").passed);
  EXPECT_TRUE(by_name.at("upper-bound-attained").passed);
  EXPECT_TRUE(by_name.at("lower-bound-attained").passed);
  // The capped form is checked too; general coefficients with |gamma| > 1
  // break the ceiling, and the suite reports that rather than hiding it.
  EXPECT_TRUE(by_name.count("sandwich-as-printed"));
}

TEST(Verify, RejectsBadParameters) {
  std::ostringstream out, err;
  VerifyOptions opts;
  opts.d = 7;
  EXPECT_EQ(cmd_verify(opts, out, err), kExitInputError);
  opts.d = 2;
  opts.samples = 0;
  EXPECT_EQ(cmd_verify(opts, out, err), kExitInputError);
  opts.samples = 5;
  opts.suite = "nope";
  EXPECT_EQ(cmd_verify(opts, out, err), kExitInputError);
}

TEST(Random, DeterministicAndValid) {
  TempDir dir;
  RandomOptions opts;
  opts.kind = "pure";
  opts.d = 2;
  opts.seed = 7;
  opts.output = (dir / "a.json").string();
  std::ostringstream out, err;
  ASSERT_EQ(cmd_random(opts, out, err), kExitOk);
  opts.output = (dir / "b.json").string();
  ASSERT_EQ(cmd_random(opts, out, err), kExitOk);
  EXPECT_EQ(Slurp(dir / "a.json"), Slurp(dir / "b.json"));
  const PureState psi = std::get<PureState>(read_state_file(dir / "a.json"));
  EXPECT_NEAR(norm(psi.amplitudes()), 1.0, 1e-12);

  opts.kind = "density";
  opts.d = 3;
  opts.rank = 2;
  opts.output = (dir / "c.json").string();
  ASSERT_EQ(cmd_random(opts, out, err), kExitOk);
  const DensityMatrix rho = std::get<DensityMatrix>(read_state_file(dir / "c.json"));
  int positive = 0;
  for (double v : hermitian_eig(rho.matrix()).values) positive += v > 1e-9;
  EXPECT_EQ(positive, 2);

  opts.output = "/nonexistent-dir/c.json";
  EXPECT_EQ(cmd_random(opts, out, err), kExitInputError);
}

TEST(Binary, ExitCodes) {
  TempDir dir;
  write_state_file(dir / "bell.json", serialize_state(max_entangled(2)));
  write_state_file(dir / "mixed.json", serialize_state(random_density(2, 3, 1)));
  write_state_file(dir / "broken.json", "{\"d\": 2, \"kind\": ");

  const BinaryRun ok = RunBinary("compute \"" + (dir / "bell.json").string() + "\"", dir);
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_NEAR(std::stod(ParseReport(ok.out)["fef_exact"]), 1.0, 1e-12) << ok.out;

  const BinaryRun broken = RunBinary("compute \"" + (dir / "broken.json").string() + "\"", dir);
  EXPECT_EQ(broken.code, 2);
  EXPECT_NE(broken.err.find("JSON"), std::string::npos) << broken.err;

  const BinaryRun no_form =
      RunBinary("compute --method exact \"" + (dir / "mixed.json").string() + "\"", dir);
  EXPECT_EQ(no_form.code, 3);

  EXPECT_EQ(RunBinary("compute", dir).code, 2);
  EXPECT_EQ(RunBinary("frobnicate", dir).code, 2);
  EXPECT_EQ(RunBinary("--help", dir).code, 0);
  EXPECT_EQ(RunBinary("verify bounds --d 2 --samples 5", dir).code, 0);
}

TEST(Binary, RandomIsByteIdenticalAcrossRuns) {
  TempDir dir;
  const std::string a = (dir / "a.json").string();
  const std::string b = (dir / "b.json").string();
  ASSERT_EQ(RunBinary("random density --d 3 --rank 2 --seed 11 --output \"" + a + "\"", dir).code, 0);
  ASSERT_EQ(RunBinary("random density --d 3 --rank 2 --seed 11 --output \"" + b + "\"", dir).code, 0);
  EXPECT_EQ(Slurp(a), Slurp(b));
  EXPECT_FALSE(Slurp(a).empty());
}

TEST(Binary, FamilyCsvToFile) {
  TempDir dir;
  const std::string csv = (dir / "iso.csv").string();
  ASSERT_EQ(RunBinary("family isotropic --d 2 --f-min 0 --f-max 1 --steps 11 --output \"" + csv + "\"", dir).code, 0);
  const std::string text = Slurp(csv);
  EXPECT_EQ(text.rfind("f,fef_exact,fef_numeric,abs_err,teleport_fidelity,useful\n", 0), 0u);
  EXPECT_EQ(text.find('\r'), std::string::npos);
}

}  // namespace
}  // namespace fefkit::cli
