#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "app.hpp"

namespace sliring::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "sli-ring");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  fs::path dir;

  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("sliring_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  std::string file(const std::string& name, const std::string& content) const {
    const fs::path p = dir / name;
    std::ofstream(p) << content;
    return p.string();
  }

  std::string worked_problem() const {
    return file("problem.json", R"({
      "basis": {"generator": [0, 1, 1, 3], "n": 2},
      "equation": {"A": {"coords": [1, 1]}, "B": {"coords": [0, 0]}, "C": {"coords": [2, 3]}}
    })");
  }
};

TEST_F(CliTest, SolveWorkedExample) {
  const auto r = run_cli({"solve", worked_problem()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("\"kind\": \"unique\""), std::string::npos);
  EXPECT_NE(r.out.find("2.25"), std::string::npos);
  EXPECT_NE(r.out.find("\"core\": 2.5"), std::string::npos);
}

TEST_F(CliTest, SolveCsvHasOneRowPerLevel) {
  const auto r = run_cli({"solve", worked_problem(), "--format", "csv", "--levels", "11"});
  ASSERT_EQ(r.code, kOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  int rows = -1;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 11);
  EXPECT_EQ(r.out.rfind("alpha,lower,upper\n", 0), 0u);
}

TEST_F(CliTest, SolveWritesOutFile) {
  const std::string out = (dir / "solution.json").string();
  const auto r = run_cli({"solve", worked_problem(), "--out", out});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_TRUE(fs::exists(out));
}

TEST_F(CliTest, VerifyPassesAndFails) {
  const std::string problem = worked_problem();
  auto r = run_cli({"verify", problem, "--samples", "50"});
  EXPECT_EQ(r.code, kOk) << r.out << r.err;
  EXPECT_NE(r.out.find("verification passed"), std::string::npos);
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) {
    EXPECT_TRUE(line.empty() || line.back() != ' ') << "trailing space: '" << line << "'";
  }

  const std::string wrong = file("wrong.json", R"({"coords": [2.0, 0.5]})");
  r = run_cli({"verify", problem, "--solution", wrong, "--samples", "10"});
  EXPECT_EQ(r.code, kVerifyFailed);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);

  const std::string embedded = file("embedded.json", R"({
    "basis": {"generator": [0, 1, 1, 3], "n": 2},
    "equation": {"A": {"coords": [1, 1]}, "B": {"coords": [0, 0]}, "C": {"coords": [2, 3]}},
    "solution": {"coords": [2.25, 0.25]}
  })");
  r = run_cli({"verify", embedded, "--samples", "10", "--format", "json"});
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_NE(r.out.find("\"passed\": true"), std::string::npos);
}

TEST_F(CliTest, BasisCertificate) {
  const std::string spec = file("basis.json", R"({"generator": [0, 1, 1, 3], "n": 3})");
  const auto r = run_cli({"basis", spec});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("\"certificate\""), std::string::npos);
  EXPECT_NE(r.err.find("certificate:"), std::string::npos);
  EXPECT_EQ(run_cli({"basis", spec, "--format", "csv"}).code, kUsage);
}

TEST_F(CliTest, DistExamples) {
  const std::string a = file("a.json", R"({"trapezoid": [0, 1, 1, 3]})");
  const std::string b = file("b.json", R"({"trapezoid": [0, 1, 1, 5]})");
  const std::string z = file("z.json", R"({"trapezoid": [0, 0, 0, 0]})");
  const std::string t = file("t.json", R"({"trapezoid": [3, 3, 3, 3]})");
  EXPECT_EQ(run_cli({"dist", a, a}).out, "0\n");
  EXPECT_EQ(run_cli({"dist", z, t}).out, "3\n");
  EXPECT_EQ(run_cli({"dist", a, b}).out, "2\n");
}

TEST_F(CliTest, EvalExpression) {
  const std::string doc = file("expr.json", R"({
    "basis": {"generator": [0, 1, 1, 3], "n": 2},
    "vars": {"X": {"coords": [2, 3]}, "Y": {"coords": [1, 1]}},
    "expr": ["cross", "X", "Y"]
  })");
  const auto r = run_cli({"eval", doc});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("-1"), std::string::npos);
  EXPECT_NE(r.out.find("11"), std::string::npos);
  EXPECT_NE(r.out.find("\"core\": 10"), std::string::npos);

  const std::string inv = file("inv.json", R"({
    "basis": {"generator": [0, 1, 1, 3], "n": 2},
    "expr": ["inv", {"coords": [-1, 1]}]
  })");
  EXPECT_EQ(run_cli({"eval", inv}).code, kNoInverse);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({"solve", worked_problem(), "--levels", "2"}).code, kUsage);
  EXPECT_EQ(run_cli({"solve", file("bad.json", "{ not json")}).code, kParse);
  EXPECT_EQ(run_cli({"basis", file("sym.json", R"({"generator": [-1, 0, 0, 1], "n": 2})")}).code, kSliFailure);
  EXPECT_EQ(run_cli({"solve", file("mismatch.json", R"({
    "basis": {"generator": [0, 1, 1, 3], "n": 2},
    "equation": {"A": {"coords": [1, 1, 1]}, "B": {"coords": [0, 0]}, "C": {"coords": [2, 3]}}
  })")}).code, kBasisMismatch);
  EXPECT_EQ(run_cli({"solve", (dir / "missing.json").string()}).code, kIo);
  EXPECT_EQ(run_cli({"basis", file("flat.json", R"({"generator": [0, 1, 2, 3], "n": 2})")}).code, kDomain);
}

TEST_F(CliTest, Deterministic) {
  const std::string problem = worked_problem();
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"solve", problem}, {"solve", problem, "--format", "csv"}, {"verify", problem, "--samples", "20"}}) {
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    EXPECT_EQ(first.code, second.code);
    EXPECT_EQ(first.out, second.out);
  }
}

}  // namespace
}  // namespace sliring::cli
