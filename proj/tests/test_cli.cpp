#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hclab/cli.hpp"
#include "hclab/io.hpp"

namespace fs = std::filesystem;
using hclab::io::Json;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hclab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  fs::path dir;
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("hclab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_F(Cli, BuildThenVerify) {
  const auto cert = path("cert.json");
  EXPECT_EQ(run({"criterion-build", "--scenario", "example-linf", "--K", "12", "--out", cert}).code, 0);
  ASSERT_TRUE(fs::exists(cert));
  const Invocation v = run({"criterion-verify", cert});
  EXPECT_EQ(v.code, 0) << v.err;
  EXPECT_TRUE(Json::parse(v.out)["passed"].get<bool>());
}

TEST_F(Cli, TamperedCertificateFailsVerification) {
  const auto cert = path("cert.json");
  ASSERT_EQ(run({"criterion-build", "--scenario", "example-linf", "--K", "8", "--out", cert}).code, 0);
  Json doc = Json::parse(slurp(cert));
  doc["payload"]["checks"][0]["exact_error"] = "1/2^40";
  std::ofstream(path("bad.json")) << doc.dump(2);
  EXPECT_EQ(run({"criterion-verify", path("bad.json")}).code, 1);
}

TEST_F(Cli, ReportsAreByteIdentical) {
  ASSERT_EQ(run({"criterion-build", "--scenario", "example-linf", "--K", "6", "--out", path("a.json")}).code, 0);
  ASSERT_EQ(run({"criterion-build", "--scenario", "example-linf", "--K", "6", "--out", path("b.json")}).code, 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  EXPECT_EQ(run({"construct", "--scenario", "thm1-construction"}).out,
            run({"construct", "--scenario", "thm1-construction"}).out);
}

TEST_F(Cli, ConjugacyOnConstruction) {
  const Invocation r = run({"conjugacy", "--scenario", "thm1-construction", "--n", "500"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["report"]["checked"], 500);
  EXPECT_EQ(run({"conjugacy", "--scenario", "example-linf"}).code, 2);
}

TEST_F(Cli, CriterionCheck) {
  EXPECT_EQ(run({"criterion-check", "--scenario", "example-linf", "--k-probe", "20"}).code, 0);

  const Invocation a = run({"criterion-check", "--scenario", "example-linf", "--a-operator", "F"});
  EXPECT_EQ(a.code, 1);
  const Json ja = Json::parse(a.out);
  EXPECT_FALSE(ja["conditions"]["iv_left_inverse"]["passed"].get<bool>());
  EXPECT_TRUE(ja["conditions"]["iii_difference_closure"]["passed"].get<bool>());

  const Invocation s = run({"criterion-check", "--scenario", "example-linf", "--sequence", "2k+1"});
  EXPECT_EQ(s.code, 1);
  EXPECT_FALSE(Json::parse(s.out)["conditions"]["iii_difference_closure"]["passed"].get<bool>());

  const Invocation le = run({"criterion-check", "--scenario", "example-linf", "--le"});
  EXPECT_EQ(Json::parse(le.out)["le_criterion"]["verdict"], "le-inapplicable-kernel-criterion-may-apply");
}

TEST_F(Cli, ConstructChecks) {
  const Invocation r = run({"construct", "--scenario", "thm1-construction"});
  EXPECT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["norm_bound"]["sup"], 2);
  EXPECT_EQ(j["boundedness"]["checked"], 1000);
  EXPECT_EQ(j["invariance"]["checked"], 200);
  EXPECT_EQ(run({"construct", "--scenario", "example-linf", "--samples", "20"}).code, 1);
}

TEST_F(Cli, OrbitAndEnumerate) {
  const Invocation o = run({"orbit", "--scenario", "example-linf", "--start", "{3:1}", "--steps", "4", "--csv", path("o.csv")});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(slurp(path("o.csv")), "n,norm,distance\n0,1,\n1,2,\n2,4,\n3,0,\n4,0,\n");

  const auto cert = path("cert.json");
  ASSERT_EQ(run({"criterion-build", "--scenario", "example-linf", "--K", "12", "--out", cert}).code, 0);
  const Invocation d = run({"orbit", "--certificate", cert, "--targets", "8", "--all-hits"});
  EXPECT_EQ(d.code, 0) << d.err;

  const Invocation en = run({"enumerate", "--scenario", "example-linf", "--count", "3"});
  const Json je = Json::parse(en.out);
  EXPECT_EQ(je["vectors"][0]["literal"], "{1:-2}");
  EXPECT_EQ(je["vectors"].size(), 3u);
}

TEST_F(Cli, OutDirFromEnvironment) {
  ::setenv(hclab::cli::kOutDirEnv, dir.c_str(), 1);
  const Invocation r = run({"enumerate", "--scenario", "example-linf", "--count", "2"});
  ::unsetenv(hclab::cli::kOutDirEnv);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_TRUE(fs::exists(dir / "enumerate.json"));
}

TEST_F(Cli, ConfigFileScenario) {
  std::ofstream(path("s.json")) << R"({"name":"custom","operator":{"scale":[2,"B"]},
    "a_operator":{"scale":["1/2^1","F"]},"subspace":{"parity":"odd","norm":"sup"},
    "sequence":{"a":2,"b":0},"decay":{"exact_geometric":-1}})";
  EXPECT_EQ(run({"criterion-check", "--config", path("s.json")}).code, 0);
}

TEST_F(Cli, ParseErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--scenario", "nope"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--count", "x", "--scenario", "example-linf"}).code, 2);
  std::ofstream(path("broken.json")) << "{\"name\": ";
  EXPECT_EQ(run({"criterion-check", "--config", path("broken.json")}).code, 2);
  EXPECT_EQ(run({"criterion-verify", path("missing.json")}).code, 2);
  EXPECT_EQ(run({"orbit", "--scenario", "example-linf", "--start", "{1:0.5}"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
