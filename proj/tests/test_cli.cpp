#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cli.hpp"

namespace fs = std::filesystem;
using hcg::cli::run_command;
using json = nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("hcg_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, GenThenEvalNashWitness) {
  CliRun g = run({"gen", "--family", "nm-lb", "--r", "3", "--k", "2", "--out", path("h.json"),
               "--witnesses", dir_.string()});
  ASSERT_EQ(g.code, 0) << g.err;
  CliRun e = run({"eval", "--game", "nm", "--hypergraph", path("h.json"), "--coloring",
               path("nash.json"), "--json"});
  ASSERT_EQ(e.code, 0) << e.err;
  const json j = json::parse(e.out);
  EXPECT_EQ(j["social_welfare"], 36);
  EXPECT_EQ(j["is_nash"], true);

  CliRun o = run({"eval", "--game", "nm", "--hypergraph", path("h.json"), "--coloring",
               path("optimum.json")});
  EXPECT_NE(o.out.find("social welfare: 48"), std::string::npos) << o.out;
}

TEST_F(CliTest, ExactOnPartite) {
  ASSERT_EQ(run({"gen", "--family", "cf-partite", "--r", "2", "--k", "2", "--out", path("p.json")}).code, 0);
  CliRun x = run({"exact", "--game", "cf", "--hypergraph", path("p.json"), "--k", "2", "--canonical",
               "--json", "--csv", path("row.csv")});
  ASSERT_EQ(x.code, 0) << x.err;
  const json j = json::parse(x.out);
  EXPECT_EQ(j["analysis"]["poa"]["text"], "2/1");
  EXPECT_EQ(j["bound"]["holds"], true);
  std::ifstream csv(path("row.csv"));
  std::string header, row;
  std::getline(csv, header);
  std::getline(csv, row);
  EXPECT_EQ(row, "4,4,2,2,cf,8,4,2,1,2,1,true");
}

TEST_F(CliTest, DynamicsReachesEquilibrium) {
  ASSERT_EQ(run({"gen", "--family", "random", "--r", "3", "--n", "8", "--m", "10", "--seed", "5",
                 "--out", path("h.json")}).code, 0);
  CliRun d = run({"dynamics", "--game", "cf", "--hypergraph", path("h.json"), "--k", "3", "--init",
               "random", "--seed", "9", "--schedule", "random", "--trace", path("t.json"), "--json"});
  ASSERT_EQ(d.code, 0) << d.err;
  const json j = json::parse(d.out);
  EXPECT_EQ(j["converged"], true);
  EXPECT_TRUE(fs::exists(path("t.json")));
}

TEST_F(CliTest, CheckSubcommand) {
  ASSERT_EQ(run({"gen", "--family", "nm-lb", "--r", "3", "--k", "2", "--out", path("h.json"),
                 "--witnesses", dir_.string()}).code, 0);
  CliRun c = run({"check", "--hypergraph", path("h.json"), "--coloring", path("nash.json"), "--json"});
  ASSERT_EQ(c.code, 0) << c.err;
  const json j = json::parse(c.out);
  EXPECT_EQ(j["lemma3"]["part3"], true);
  EXPECT_FALSE(j["lemma5"].is_null());
}

TEST_F(CliTest, VerifyPotentialSuite) {
  CliRun v = run({"verify", "--suite", "potential", "--trials", "1000", "--seed", "42"});
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_NE(v.out.find("result: PASS"), std::string::npos);
}

TEST_F(CliTest, VerifyCounterexampleFileAbsentOnSuccess) {
  CliRun v = run({"verify", "--suite", "oracle", "--trials", "20", "--seed", "1", "--json",
               "--counterexample", path("cx.json")});
  ASSERT_EQ(v.code, 0) << v.out;
  EXPECT_EQ(json::parse(v.out)["ok"], true);
  EXPECT_FALSE(fs::exists(path("cx.json")));
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({"eval", "--game", "xx", "--hypergraph", "a", "--coloring", "b"}).code, 1);
  EXPECT_EQ(run({"gen", "--family", "nm-lb", "--r", "2", "--k", "2", "--out", path("h.json")}).code, 1);
  EXPECT_EQ(run({"eval", "--game", "nm", "--hypergraph", path("missing.json"), "--coloring",
                 path("missing.json")}).code, 2);

  std::ofstream(path("bad.json")) << "{\"num_vertices\": 3, \"edges\": [[0, 7]]}";
  std::ofstream(path("c.json")) << "{\"num_colors\": 2, \"colors\": [0, 0, 0]}";
  EXPECT_EQ(run({"eval", "--game", "nm", "--hypergraph", path("bad.json"), "--coloring",
                 path("c.json")}).code, 2);

  ASSERT_EQ(run({"gen", "--family", "random", "--r", "3", "--n", "30", "--m", "5", "--seed", "1",
                 "--out", path("big.json")}).code, 0);
  EXPECT_EQ(run({"exact", "--game", "nm", "--hypergraph", path("big.json"), "--k", "3"}).code, 4);
  EXPECT_EQ(run({"exact", "--game", "nm", "--hypergraph", path("big.json"), "--k", "2", "--limit",
                 "100"}).code, 4);
}

TEST_F(CliTest, DeterministicOutput) {
  const std::vector<std::string> verify{"verify", "--suite", "lemma5", "--trials", "15", "--seed", "7",
                                        "--colorings", "50", "--json"};
  EXPECT_EQ(run(verify).out, run(verify).out);
  const std::vector<std::string> gen{"gen", "--family", "random", "--r", "3", "--n", "9", "--m", "7",
                                     "--seed", "11", "--out", path("a.json")};
  ASSERT_EQ(run(gen).code, 0);
  std::ifstream a(path("a.json"));
  std::stringstream first;
  first << a.rdbuf();
  ASSERT_EQ(run(gen).code, 0);
  std::ifstream b(path("a.json"));
  std::stringstream second;
  second << b.rdbuf();
  EXPECT_EQ(first.str(), second.str());
}
