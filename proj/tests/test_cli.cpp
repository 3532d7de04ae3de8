#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "recolor/recolor.hpp"

#ifndef RECOLOR_CLI
#error "RECOLOR_CLI must point at the recolor binary"
#endif

using namespace recolor;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("recolor-cli-" + std::to_string(::getpid()) + "-" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  std::string read(const std::string& name) {
    std::ifstream in(dir_ / name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // Runs the CLI with stdout captured; returns the exit code.
  int run(const std::string& args, const std::string& env = "") {
    const auto out = (dir_ / "stdout.txt").string();
    const std::string cmd = env + " " + RECOLOR_CLI + " " + args + " > " + out + " 2> " + (dir_ / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    stdout_ = read("stdout.txt");
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path dir_;
  std::string stdout_;
};

const char* kDiamond = "4 5\n0 1\n0 2\n0 3\n1 2\n1 3\n";
const char* kC6 = "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";
const char* kK4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

}  // namespace

TEST_F(Cli, PathOnDiamond) {
  const auto g = file("g.txt", kDiamond);
  const auto a = file("a.txt", "4\n1 2 3 3\n");
  const auto b = file("b.txt", "4\n4 3 1 2\n");
  const auto out = (dir_ / "seq.txt").string();
  ASSERT_EQ(run("path --graph " + g + " --colouring-a " + a + " --colouring-b " + b + " --out " + out), 0);
  const auto seq = parse_sequence(read("seq.txt"));
  EXPECT_EQ(apply_sequence(graphs::diamond(), Colouring(4, {1, 2, 3, 3}), seq), Colouring(4, {4, 3, 1, 2}));
  EXPECT_EQ(run("validate --graph " + g + " --colouring " + a + " --sequence " + out), 0);
}

TEST_F(Cli, PathJson) {
  const auto g = file("g.txt", kDiamond);
  const auto a = file("a.txt", "4\n1 2 3 3\n");
  const auto b = file("b.txt", "4\n4 3 1 2\n");
  ASSERT_EQ(run("path --format json --graph " + g + " --colouring-a " + a + " --colouring-b " + b), 0);
  const auto j = nlohmann::json::parse(stdout_);
  EXPECT_EQ(j["valid"], true);
  EXPECT_EQ(j["method"], "constructive");
  EXPECT_EQ(j["steps"].size(), j["length"].get<std::size_t>());
}

TEST_F(Cli, PathFrozenIsProvablyNegative) {
  const auto g = file("c6.txt", kC6);
  const auto a = file("a.txt", "3\n1 2 3 1 2 3\n");
  const auto b = file("b.txt", "3\n1 2 1 2 1 2\n");
  EXPECT_EQ(run("path --graph " + g + " --colouring-a " + a + " --colouring-b " + b), 2);
}

TEST_F(Cli, PathFallsBackToOracle) {
  const auto g = file("c6.txt", kC6);
  const auto a = file("a.txt", "3\n1 2 1 2 1 2\n");
  const auto b = file("b.txt", "3\n2 3 2 3 2 3\n");
  ASSERT_EQ(run("path --graph " + g + " --colouring-a " + a + " --colouring-b " + b), 0);
  const auto seq = parse_sequence(stdout_);
  EXPECT_EQ(apply_sequence(graphs::cycle(6), Colouring(3, {1, 2, 1, 2, 1, 2}), seq),
            Colouring(3, {2, 3, 2, 3, 2, 3}));
}

TEST_F(Cli, PathInconclusiveOverLimit) {
  const auto g = file("c6.txt", kC6);
  const auto a = file("a.txt", "3\n1 2 1 2 1 2\n");
  const auto b = file("b.txt", "3\n2 3 2 3 2 3\n");
  EXPECT_EQ(run("path --graph " + g + " --colouring-a " + a + " --colouring-b " + b + " --limit 10"), 3);
}

TEST_F(Cli, InputErrors) {
  const auto bad = file("bad.txt", "4 5\n0 1\n");
  const auto a = file("a.txt", "4\n1 2 3 3\n");
  EXPECT_EQ(run("path --graph " + bad + " --colouring-a " + a + " --colouring-b " + a), 1);
  const auto g = file("g.txt", kDiamond);
  const auto improper = file("i.txt", "4\n1 1 3 3\n");
  EXPECT_EQ(run("path --graph " + g + " --colouring-a " + improper + " --colouring-b " + a), 1);
  const auto short_c = file("s.txt", "4\n1 2\n");
  EXPECT_EQ(run("path --graph " + g + " --colouring-a " + short_c + " --colouring-b " + a), 1);
  EXPECT_EQ(run("path --graph " + (dir_ / "missing.txt").string() + " --colouring-a " + a + " --colouring-b " + a), 1);
  EXPECT_EQ(run(""), 1);
  EXPECT_EQ(run("explore --graph " + g), 1);
  EXPECT_EQ(run("bogus"), 1);
}

TEST_F(Cli, Validate) {
  const auto g = file("g.txt", kDiamond);
  const auto a = file("a.txt", "4\n1 2 3 3\n");
  EXPECT_EQ(run("validate --graph " + g + " --colouring " + a + " --sequence " + file("e.txt", "steps: 0\n")), 0);
  EXPECT_EQ(run("validate --graph " + g + " --colouring " + a + " --sequence " +
                file("m.txt", "steps: 2\n0 4\n1 4\n")),
            2);
  EXPECT_NE(stdout_.find("step 1"), std::string::npos);
  EXPECT_EQ(run("validate --format json --graph " + g + " --colouring " + a + " --sequence " +
                file("n.txt", "steps: 1\n0 1\n")),
            2);
  EXPECT_EQ(nlohmann::json::parse(stdout_)["error"], "NoOpStep");
  EXPECT_EQ(run("validate --graph " + g + " --colouring " + a + " --sequence " + file("x.txt", "steps: 3\n0 1\n")), 1);
}

TEST_F(Cli, Explore) {
  const auto k4 = file("k4.txt", kK4);
  ASSERT_EQ(run("explore --format json --graph " + k4 + " --k 4"), 0);
  auto j = nlohmann::json::parse(stdout_);
  EXPECT_EQ(j["frozenCount"], 24);
  EXPECT_EQ(j["components"].size(), 24u);

  ASSERT_EQ(run("explore --format json --graph " + file("c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n") + " --k 3"), 0);
  j = nlohmann::json::parse(stdout_);
  int big = 0;
  for (const auto& c : j["components"]) big += c["size"].get<int>() >= 2;
  EXPECT_GE(big, 2);

  ASSERT_EQ(run("explore --format json --diameters --graph " + file("p3.txt", "3 2\n0 1\n1 2\n") + " --k 3"), 0);
  j = nlohmann::json::parse(stdout_);
  EXPECT_EQ(j["totalColourings"], 12);
  EXPECT_EQ(j["components"].size(), 1u);
}

TEST_F(Cli, LimitFromEnvironment) {
  const auto k4 = file("k4.txt", kK4);
  EXPECT_EQ(run("explore --graph " + k4 + " --k 4", "RECOLOR_LIMIT=100"), 3);
  EXPECT_EQ(run("explore --graph " + k4 + " --k 4", "RECOLOR_LIMIT=1000"), 0);
  // An explicit flag wins over the environment.
  EXPECT_EQ(run("explore --graph " + k4 + " --k 4 --limit 1000", "RECOLOR_LIMIT=100"), 0);
}

TEST_F(Cli, DecideCensusClassifyEliminate) {
  const auto c6 = file("c6.txt", kC6);
  const auto frozen = file("f.txt", "3\n1 2 3 1 2 3\n");
  const auto loose = file("l.txt", "3\n1 2 1 2 1 2\n");
  EXPECT_EQ(run("decide --graph " + c6 + " --colouring-a " + frozen + " --colouring-b " + frozen), 0);
  EXPECT_EQ(run("decide --graph " + c6 + " --colouring-a " + frozen + " --colouring-b " + loose), 2);
  ASSERT_EQ(run("census --format json --graph " + c6 + " --k 3"), 0);
  EXPECT_EQ(nlohmann::json::parse(stdout_)["count"], 6);
  ASSERT_EQ(run("classify --format json --graph " + file("c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n") + " --k 3"), 0);
  EXPECT_EQ(nlohmann::json::parse(stdout_)["empiricalType"], 3);
  const auto star = file("star.txt", "4 3\n0 1\n0 2\n0 3\n");
  ASSERT_EQ(run("eliminate --graph " + star + " --colouring " + file("s.txt", "4\n4 1 2 3\n")), 0);
  EXPECT_EQ(parse_sequence(stdout_).size(), 2u);
}

TEST_F(Cli, VerifyCorpus) {
  const auto cache = (dir_ / "cache").string();
  ASSERT_EQ(run("verify-corpus --max-n 5 --format json --cache " + cache), 0);
  const auto first = nlohmann::json::parse(stdout_);
  EXPECT_EQ(first["passed"], true);
  EXPECT_EQ(first["cacheRegenerated"], true);
  ASSERT_EQ(run("verify-corpus --max-n 5 --format json --cache " + cache), 0);
  auto second = nlohmann::json::parse(stdout_);
  EXPECT_EQ(second["cacheRegenerated"], false);
  second["cacheRegenerated"] = true;
  EXPECT_EQ(first.dump(), second.dump());

  // A corrupted cache is rebuilt.
  for (const auto& entry : fs::recursive_directory_iterator(cache))
    if (entry.path().filename() == "manifest.txt") std::ofstream(entry.path()) << "junk\n";
  ASSERT_EQ(run("verify-corpus --max-n 5 --format json --cache " + cache), 0);
  const auto third = nlohmann::json::parse(stdout_);
  EXPECT_EQ(third["cacheRegenerated"], true);
  EXPECT_EQ(third["passed"], true);
}
