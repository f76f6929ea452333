#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(LIEFORM_CLI_PATH) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  int status = pclose(pipe.release());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(LIEFORM_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("lieform_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, ValidateExitCodes) {
  EXPECT_EQ(run("validate " + data("r2_gf3.json")).code, 0);
  EXPECT_EQ(run("validate " + data("so3like_q.json")).code, 4);
  EXPECT_EQ(run("validate " + data("sl2_q.json")).code, 4);
  EXPECT_EQ(run("validate " + data("jacobi_broken_q.json")).code, 4);
  EXPECT_EQ(run("validate /nonexistent.json").code, 2);
  EXPECT_EQ(run("validate " + temp_file("bad.json", "{\"field\": \"GF(4)\", \"dim\": 1}")).code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, AnalyzeIsDeterministicJson) {
  auto a = run("--json analyze " + data("r2_gf3.json") + " --formation nilpotent --formation supersoluble");
  auto b = run("--json analyze " + data("r2_gf3.json") + " --formation nilpotent --formation supersoluble");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["formations"][0]["normalisers"].size(), 3u);
  EXPECT_EQ(j["formations"][1]["normalisers"].size(), 1u);
}

TEST(Cli, NormalisersOverQIsUnsupported) {
  EXPECT_EQ(run("normalisers " + data("r2_q.json")).code, 3);
  EXPECT_EQ(run("analyze " + data("r2_q.json")).code, 0);
}

TEST(Cli, Derivations) {
  auto r = run("--json derivations " + data("h3_gf2.json"));
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["dim"], 6);
  EXPECT_EQ(j["inner_dim"], 2);
}

TEST(Cli, CheckIntravarianceAndReplay) {
  auto r = run("--json check-intravariance " + data("abelian2_gf2.json") + " --subalgebra 1,0");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["linear"].get<bool>());
  EXPECT_FALSE(j["extension"].get<bool>());
  ASSERT_TRUE(j.contains("witness_derivation"));

  // replay as a counterexample dump
  nlohmann::json dump;
  dump["property"] = "not-intravariant";
  dump["algebra"] = nlohmann::json::parse(std::ifstream(data("abelian2_gf2.json")));
  dump["subalgebra"] = nlohmann::json::array({nlohmann::json::array({"1", "0"})});
  auto replay = run("--json check-intravariance " + temp_file("dump.json", dump.dump()));
  ASSERT_EQ(replay.code, 0);
  EXPECT_FALSE(nlohmann::json::parse(replay.out)["intravariant"].get<bool>());

  EXPECT_EQ(run("check-intravariance " + data("r2_gf3.json") + " --subalgebra 1,1 --method linear").code, 0);
  EXPECT_EQ(run("check-intravariance " + data("h3_gf2.json") + " --subalgebra '1,0,0;0,1,0'").code, 1);
  EXPECT_EQ(run("check-intravariance " + data("r2_gf3.json") + " --subalgebra 1,1 --method magic").code, 2);
}

TEST(Cli, VerifyChain) {
  EXPECT_EQ(run("verify-chain " + data("r2_gf3.json") + " " + data("r2_chain_gf3.json")).code, 0);
  auto bad = temp_file("chain_bad.json", R"([[["1","0"],["0","1"]],[["0","1"]]])");
  auto r = run("--json verify-chain " + data("r2_gf3.json") + " " + bad);
  EXPECT_EQ(r.code, 13);
  EXPECT_FALSE(nlohmann::json::parse(r.out)["valid"].get<bool>());
  auto q = temp_file("chain_q.json", R"([[["1","0"],["0","1"]],[["1","5/2"]]])");
  EXPECT_EQ(run("verify-chain " + data("r2_q.json") + " " + q).code, 0);
}

TEST(Cli, SmallSweepIsClean) {
  auto r = run("--json sweep --field 'GF(2)' --max-dim 3 --formation nilpotent --formation soluble");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["results"].size(), 2u);
  EXPECT_EQ(j["results"][0]["algebras"], 23);
  EXPECT_TRUE(j["results"][0]["violations"].empty());
  EXPECT_EQ(run("sweep --field Q --max-dim 2").code, 3);
}
