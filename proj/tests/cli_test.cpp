#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ybfuse/io/json.hpp"

namespace ybfuse {
namespace {

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;
};

Invocation ybfuse(std::vector<std::string> args) {
  args.insert(args.begin(), "ybfuse");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Invocation r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    setenv("YBFUSE_DATA_DIR", YBFUSE_TEST_DATA_DIR, 1);
    unsetenv("YBFUSE_EMIT");
  }
};

TEST_F(Cli, KernelPretty) {
  const Invocation r = ybfuse({"kernel", "--kind", "yang", "--N", "2", "--emit", "pretty"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "R(u) for yang N=2\n"
            "(u-1)/u     .     .        .\n"
            "      .     1  -1/u        .\n"
            "      .  -1/u     1        .\n"
            "      .     .     .  (u-1)/u\n");
}

TEST_F(Cli, KernelJsonSchema) {
  const Invocation r = ybfuse({"--emit", "json", "kernel", "--kind", "hecke", "--q", "3/2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["kernel"]["kind"], "hecke");
  EXPECT_EQ(j["kernel"]["q"], "3/2");
  EXPECT_EQ(j["variable"], "a");
  EXPECT_EQ(j["matrix"]["rows"], 4);
  EXPECT_EQ(j["matrix"]["entries"].size(), 16u);
}

TEST_F(Cli, EmitEnvironmentDefault) {
  setenv("YBFUSE_EMIT", "json", 1);
  const Invocation r = ybfuse({"kernel"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NO_THROW(Json::parse(r.out));
  const Invocation p = ybfuse({"kernel", "--emit", "pretty"});
  EXPECT_EQ(p.out.rfind("R(u)", 0), 0u);
  setenv("YBFUSE_EMIT", "xml", 1);
  EXPECT_EQ(ybfuse({"kernel"}).code, 2);
}

TEST_F(Cli, FuseMatchesReproduction) {
  const Invocation f = ybfuse({"--emit", "json", "fuse", "--kernel", "yang", "--N", "2",
                        "--tableau", "[[1,2]]", "--tableau2", "[[1,2]]"});
  ASSERT_EQ(f.code, 0) << f.err;
  const Invocation g = ybfuse({"--emit", "json", "reproduce", "mat-Sn"});
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_EQ(Json::parse(f.out)["matrix"], Json::parse(g.out)["matrix"]);
}

TEST_F(Cli, FuseWithBasisFile) {
  const auto path = std::filesystem::temp_directory_path() / "ybfuse_cli_basis.json";
  {
    std::ofstream out(path);
    out << R"({"left": [["1","0"],["0","1"]], "right": [["1"],["0"]]})";
  }
  const Invocation r = ybfuse({"--emit", "json", "fuse", "--tableau", "[[1]]", "--tableau2", "[[1]]",
                        "--basis", path.string()});
  EXPECT_EQ(r.code, 2);  // columns (x) e_1 do not span an invariant subspace
  {
    std::ofstream out(path);
    out << R"({"left": [["1","0"],["0","1"]], "right": [["1","0"],["0","1"]]})";
  }
  const Invocation ok = ybfuse({"--emit", "json", "fuse", "--tableau", "[[1]]", "--tableau2", "[[1]]",
                         "--basis", path.string()});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(Json::parse(ok.out)["basis"], "explicit");
  std::filesystem::remove(path);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(ybfuse({"fuse", "--tableau", "[[2,1]]", "--tableau2", "[[1]]"}).code, 2);
  EXPECT_EQ(ybfuse({"fuse", "--tableau", "[[1,2]", "--tableau2", "[[1]]"}).code, 2);
  EXPECT_EQ(ybfuse({"fuse", "--tableau", "[[1],[2],[3]]", "--tableau2", "[[1]]"}).code, 2);
  EXPECT_EQ(ybfuse({"kernel", "--kind", "hecke", "--q", "1"}).code, 2);
  EXPECT_EQ(ybfuse({"kernel", "--kind", "hecke", "--q", "x"}).code, 2);
  EXPECT_EQ(ybfuse({"kernel", "--kind", "yang", "--M", "1"}).code, 2);
  EXPECT_EQ(ybfuse({"kernel", "--kind", "xxz"}).code, 2);
  EXPECT_EQ(ybfuse({"verify", "nothing"}).code, 2);
  EXPECT_EQ(ybfuse({}).code, 2);
  const Invocation r = ybfuse({"reproduce", "bogus"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("mat-Sn"), std::string::npos);
}

TEST_F(Cli, ReproduceExitCodes) {
  const Invocation sn = ybfuse({"reproduce", "mat-Sn"});
  EXPECT_EQ(sn.code, 0);
  EXPECT_NE(sn.out.find("MATCH"), std::string::npos);
  EXPECT_EQ(ybfuse({"reproduce", "ex-Ra", "--q", "3/2"}).code, 0);
  const Invocation hn = ybfuse({"--emit", "json", "reproduce", "mat-Hn"});
  EXPECT_EQ(hn.code, 0);
  const Json j = Json::parse(hn.out);
  EXPECT_EQ(j["match"], true);
  ASSERT_EQ(j["errata"].size(), 1u);
  EXPECT_EQ(j["errata"][0]["row"], 5);
  EXPECT_EQ(j["errata"][0]["justified"], true);
}

TEST_F(Cli, ReproduceMismatchExitsOne) {
  // A data directory whose golden differs in one entry.
  const auto dir = std::filesystem::temp_directory_path() / "ybfuse_cli_golden";
  std::filesystem::create_directories(dir / "golden");
  Json g = Json::parse(std::ifstream(std::string(YBFUSE_TEST_DATA_DIR) + "/golden/ex-Ra.json"));
  g["entries"][0][0] = "a";
  std::ofstream(dir / "golden" / "ex-Ra.json") << g.dump();
  setenv("YBFUSE_DATA_DIR", dir.c_str(), 1);
  const Invocation r = ybfuse({"reproduce", "ex-Ra"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("first mismatch at (1,1)"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_F(Cli, VerifyReport) {
  const Invocation r = ybfuse({"--emit", "json", "verify", "base-ybe", "--kind", "hecke", "--N", "2",
                        "--q", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["suites"][0]["suite"], "base-ybe");
  EXPECT_EQ(j["suites"][0]["failures"], 0);
  EXPECT_FALSE(j["suites"][0]["results"][0].contains("seconds"));
  const Invocation timed = ybfuse({"--emit", "json", "verify", "unitarity", "--timing"});
  EXPECT_TRUE(Json::parse(timed.out)["suites"][0]["results"][0].contains("seconds"));
}

TEST_F(Cli, VerifySchurWeylYang) {
  const Invocation r = ybfuse({"verify", "schur-weyl", "--kind", "yang", "--N", "2", "--max-n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS rank F[[1,2],[3,4]] yang N=2"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST_F(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args = {"--emit", "json", "verify", "nonstandard", "--seed", "7"};
  EXPECT_EQ(ybfuse(args).out, ybfuse(args).out);
  const Invocation other = ybfuse({"--emit", "json", "verify", "nonstandard", "--seed", "8"});
  EXPECT_NE(ybfuse(args).out, other.out);
  EXPECT_EQ(ybfuse({"reproduce", "mat-Hn"}).out, ybfuse({"reproduce", "mat-Hn"}).out);
}

TEST_F(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "ybfuse_cli_out.json";
  const Invocation r = ybfuse({"--emit", "json", "-o", path.string(), "kernel"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NO_THROW(Json::parse(std::ifstream(path)));
  std::filesystem::remove(path);
}

TEST_F(Cli, IdempotentSym) {
  const Invocation r = ybfuse({"--emit", "json", "idempotent", "--group", "sym", "--tableau", "[[1,2],[3]]"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["idempotent"], true);
  EXPECT_EQ(j["scale"], "1/1");
  EXPECT_EQ(j["invertible"], false);
  EXPECT_EQ(j["ideal_dim"], 2);
  EXPECT_EQ(j["element"]["terms"].size(), 6u);
  EXPECT_EQ(ybfuse({"idempotent", "--n", "4", "--tableau", "[[1,2],[3]]"}).code, 2);
}

TEST_F(Cli, IdempotentHecke) {
  const Invocation r = ybfuse({"--emit", "json", "idempotent", "--group", "hecke", "--q", "3/2",
                        "--tableau", "[[1,2],[3]]"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["candidate"]["q"], "3/2");
  EXPECT_EQ(j["ideal_dim"], 2);
}

TEST_F(Cli, ScanPairsFile) {
  const auto path = std::filesystem::temp_directory_path() / "ybfuse_cli_pairs.json";
  std::ofstream(path) << R"([[1, 2], ["5", "9"], [0, 3]])";
  const Invocation r = ybfuse({"--emit", "json", "scan", "--n", "3", "--pairs", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["idempotent"], true);
  EXPECT_EQ(j[0]["scale"], "6/1");
  EXPECT_EQ(j[1]["invertible"], true);
  EXPECT_EQ(j[2]["singular"], true);
  EXPECT_EQ(ybfuse({"scan", "--n", "4"}).code, 2);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace ybfuse
