#include <sstream>

#include <gtest/gtest.h>

#include "verify.hpp"

using namespace octograss::cli;

namespace {

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST(RunSuite, OctonionSuitePasses) {
  const SuiteResult r = run_suite("octonion", Config{});
  EXPECT_GE(r.checks.size(), 4u);
  EXPECT_EQ(r.failed(), 0);
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(RunSuite, UnknownSuiteThrows) {
  EXPECT_THROW(run_suite("lemmas-sigma4", Config{}), std::invalid_argument);
}

TEST(RunSuite, LaplacianCheckForSigma3) {
  const SuiteResult r = run_suite("laplacians", Config{});
  bool found = false;
  for (const auto& c : r.checks) {
    if (c.id == "laplacian.sigma3.base") {
      found = true;
      EXPECT_TRUE(c.passed);
      EXPECT_LT(c.residual, 1e-6);
    }
  }
  EXPECT_TRUE(found);
}

TEST(RunSuite, ObstructionIsOneHalfAtQuarterPi) {
  const SuiteResult r = run_suite("parallel-obstruction", Config{});
  for (const auto& c : r.checks) {
    EXPECT_TRUE(c.passed) << c.id;
    if (c.id == "parallel.obstruction") EXPECT_NE(c.computed.find(" 0.5 "), std::string::npos);
  }
}

TEST(RunSuite, FailuresSetTheExitCode) {
  Config strict;
  strict.tol = 1e-300;
  strict.fd_tol = 1e-300;
  const SuiteResult r = run_suite("laplacians", strict);
  EXPECT_GT(r.failed(), 0);
  EXPECT_EQ(r.exit_code(), 1);
}

TEST(Json, SchemaAndDeterminism) {
  Config c;
  c.seed = 7;
  c.suites = {"octonion", "diagram-phi"};
  const auto a = to_json(c, run_suites(c)).dump();
  const auto b = to_json(c, run_suites(c)).dump();
  EXPECT_EQ(a, b);
  const auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j["config"]["seed"], 7);
  ASSERT_TRUE(j["checks"].is_array());
  for (const char* key : {"id", "anchor", "expected", "provenance", "computed", "residual", "tolerance",
                          "passed", "seconds"}) {
    EXPECT_TRUE(j["checks"][0].contains(key)) << key;
  }
  EXPECT_EQ(j["summary"]["failed"], 0);
}

TEST(Export, EpsilonTable) {
  std::ostringstream out;
  export_table("epsilon-table", out);
  EXPECT_EQ(count_lines(out.str()), 344);
  EXPECT_NE(out.str().find("\n1,2,3,+1\n"), std::string::npos);
  EXPECT_NE(out.str().find("\n2,1,3,-1\n"), std::string::npos);
}

TEST(Export, TangentBasisOfG28) {
  std::ostringstream out;
  export_table("tangent-basis", out);
  EXPECT_EQ(count_lines(out.str()), 13);
}

TEST(Export, LemmaValuesIncludeTheSameLevelJTable) {
  std::ostringstream out;
  export_table("lemma-values", out);
  EXPECT_NE(out.str().find("\nJ.second.same-level,2,0,3,0,"), std::string::npos);
  EXPECT_THROW(export_table("nope", out), std::invalid_argument);
}
