#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "pseudoseg/search.hpp"

using namespace pseudoseg;
using nlohmann::json;

namespace {

std::string fixture(const std::string& name) { return std::string(PSEUDOSEG_FIXTURES) + "/" + name; }

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("pseudoseg-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string at(const std::string& name) const { return (dir_ / name).string(); }

 private:
  std::filesystem::path dir_;
};

}  // namespace

TEST(Cli, ValidateExitCodes) {
  EXPECT_EQ(run({"validate", fixture("fig1_quasigrid.json")}).code, 0);
  const auto twice = run({"validate", fixture("double_crossing.json")});
  EXPECT_EQ(twice.code, 2);
  EXPECT_FALSE(twice.report()["validation"]["violations"].empty());
  EXPECT_EQ(run({"validate", fixture("truncated.json")}).code, 3);
  EXPECT_EQ(run({"validate", fixture("missing.json")}).code, 3);
}

TEST(Cli, ReportsCarryTheInputHash) {
  EXPECT_EQ(cli::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  const auto r = run({"validate", fixture("fig1_quasigrid.json")}).report();
  EXPECT_EQ(r["version"], 1);
  EXPECT_EQ(r["input_sha256"], cli::sha256_hex(read_text(fixture("fig1_quasigrid.json"))));
}

TEST(Cli, AnalyzeFigureOne) {
  const auto r = run({"analyze", fixture("fig1_quasigrid.json"), "--probe"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.report();
  EXPECT_EQ(j["counts"]["T"], 3);
  EXPECT_EQ(j["counts"]["X"], 3);
  const auto f = ingest(parse_family_file(read_text(fixture("fig1_quasigrid.json"))).curves);
  EXPECT_EQ(j["arrangement"]["tC"], compute_tc(build_arrangement(f)));
  EXPECT_EQ(j["arrangement"]["tC"], 1);
  EXPECT_EQ(j["probe"]["n"], 4);
  EXPECT_EQ(j["decompositions"][0]["parts"], 1);
}

TEST_F(CliFiles, AnalyzeDisjointCurves) {
  write_text(at("two.json"), R"({"version":1,"mode":"geometric","curves":[{"id":0,"points":[["0","0"],["1","0"]]},{"id":1,"points":[["3","0"],["4","0"]]}]})");
  const auto r = run({"analyze", at("two.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.report()["arrangement"]["tC"], 1);
}

TEST(Cli, AnalyzeRejectsEulerFailures) {
  EXPECT_EQ(run({"validate", fixture("not_realizable.json")}).code, 0);
  const auto r = run({"analyze", fixture("not_realizable.json")});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.err.find("NotRealizable"), std::string::npos);
}

TEST(Cli, DecomposeFigures) {
  auto parts = [](const std::string& name) {
    const auto r = run({"decompose", fixture(name), "--g", "0"});
    EXPECT_EQ(r.code, 0) << r.err;
    return r.report()["decomposition"]["parts"].size();
  };
  EXPECT_EQ(parts("fig1_quasigrid.json"), 1u);
  EXPECT_EQ(parts("fig3_two_grids.json"), 2u);
  const auto mixed = parts("mixed_four_classes.json");
  EXPECT_LE(mixed, 8u);
  EXPECT_EQ(mixed, 4u);
  EXPECT_EQ(run({"decompose", fixture("fig1_quasigrid.json"), "--g", "9"}).code, 2);
}

TEST(Cli, ExitCodeMapping) {
  EXPECT_EQ(cli::exit_code_for(ErrorCode::Schema), 3);
  EXPECT_EQ(cli::exit_code_for(ErrorCode::NotRealizable), 4);
  EXPECT_EQ(cli::exit_code_for(ErrorCode::InputContradictsLemma), 5);
  EXPECT_EQ(cli::exit_code_for(ErrorCode::GeneralPositionViolation), 2);
}

TEST_F(CliFiles, SvgIsDeterministic) {
  ASSERT_EQ(run({"generate", "--k", "4", "--class", "left-opposite"}).code, 0);
  write_text(at("grid.json"), run({"generate", "--k", "4", "--class", "left-opposite"}).out);
  for (const auto& in : {fixture("fig3_two_grids.json"), at("grid.json")}) {
    ASSERT_EQ(run({"render", in, "-o", at("a.svg")}).code, 0);
    ASSERT_EQ(run({"analyze", in, "--svg", at("b.svg")}).code, 0);
    const auto a = read_text(at("a.svg"));
    EXPECT_EQ(a, read_text(at("b.svg")));
    EXPECT_NE(a.find("class=\"touching\""), std::string::npos);
    EXPECT_NE(a.find("class=\"crossing\""), std::string::npos);
    EXPECT_NE(a.find("id=\"face-"), std::string::npos);
  }
}

TEST_F(CliFiles, IngestWritesACombinatorialFile) {
  const auto r = run({"ingest", fixture("fig3_two_grids.json")});
  ASSERT_EQ(r.code, 0);
  write_text(at("fig3.json"), r.out);
  EXPECT_EQ(run({"validate", at("fig3.json")}).code, 0);
  EXPECT_EQ(run({"decompose", at("fig3.json"), "--g", "0"}).report()["decomposition"]["parts"].size(), 2u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 3);
  EXPECT_EQ(run({"generate", "--class", "sideways"}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliFiles, SearchExitCodes) {
  const auto none = run({"search", "--lemma", "42", "--max-curves", "7", "--manifest", at("m.json"), "--witnesses", at("w.json")});
  EXPECT_EQ(none.code, 0) << none.err;
  EXPECT_TRUE(none.report()["witnesses"].empty());
  const auto m = json::parse(read_text(at("m.json")));
  EXPECT_EQ(m["limits"]["max_meetings"], 25);
  EXPECT_TRUE(m.contains("searched"));
  EXPECT_FALSE(std::filesystem::exists(at("w.json")));

  EXPECT_EQ(run({"search", "--lemma", "41", "--max-curves", "5"}).code, 0);

  const auto found = run({"search", "--lemma", "42", "--max-curves", "3", "--witnesses", at("w.json")});
  EXPECT_EQ(found.code, 6);
  const auto w = json::parse(read_text(at("w.json")));
  SearchLimits l;
  l.h_size = 1;
  ASSERT_FALSE(w["witnesses"].empty());
  for (const auto& x : w["witnesses"]) EXPECT_TRUE(replays(l, x["run"].get<int>(), family_from_json(x["family"])));
}

TEST_F(CliFiles, SearchResumesToTheSameResult) {
  const std::vector<std::string> base{"search", "--lemma", "42", "--max-curves", "5"};
  auto with = [&](std::vector<std::string> extra) {
    auto a = base;
    a.insert(a.end(), extra.begin(), extra.end());
    return a;
  };
  const auto whole = run(with({"--witnesses", at("w0.json")}));
  ASSERT_EQ(whole.code, 6);
  auto r = run(with({"--max-tasks", "9", "--checkpoint", at("c.json"), "--witnesses", at("w1.json")}));
  int legs = 1;
  while (r.code == 7) {
    r = run({"search", "--resume", at("c.json"), "--max-tasks", "9", "--checkpoint", at("c.json"), "--witnesses", at("w1.json")});
    ++legs;
  }
  EXPECT_GT(legs, 2);
  EXPECT_EQ(r.code, 6);
  const auto a = whole.report()["manifest"];
  const auto b = r.report()["manifest"];
  EXPECT_EQ(a["searched"], b["searched"]);
  EXPECT_EQ(a["witnesses"], b["witnesses"]);
  EXPECT_EQ(a["tasks"], b["tasks"]);
  EXPECT_EQ(read_text(at("w0.json")), read_text(at("w1.json")));
}
