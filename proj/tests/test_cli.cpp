#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "rbd/json_io.hpp"

namespace fs = std::filesystem;
using rbd::Json;

namespace {

const fs::path kFixtures = RBD_FIXTURES_DIR;

struct Run {
  int code = -1;
  std::string out;
};

// Runs rbdcalc with the given argument string; stderr is discarded.
Run rbdcalc(const std::string& args) {
  const std::string cmd = std::string("\"") + RBDCALC_BIN + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(int family, int a) {
  return (kFixtures / ("family" + std::to_string(family)) / ("a" + std::to_string(a) + ".json")).string();
}

fs::path scratch() {
  auto dir = fs::temp_directory_path() / ("rbd_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Cli, VerifyConfigValidAndInvalid) {
  auto ok = rbdcalc("verify-config " + fixture(1, 3));
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(Json::parse(ok.out)["report"]["passed"], true);

  const auto dir = scratch();
  const auto bad = dir / "bad.json";
  std::ofstream(bad) << R"({"p": 2, "n": 2, "classes": [[0, 1, 1]]})";
  auto r = rbdcalc("verify-config " + bad.string());
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.out)["report"]["passed"], false);
  fs::remove_all(dir);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(rbdcalc("bogus").code, 2);
  EXPECT_EQ(rbdcalc("verify-config --no-such-flag " + fixture(1, 3)).code, 2);
  EXPECT_EQ(rbdcalc("verify-config /nonexistent/cfg.json").code, 2);
  EXPECT_EQ(rbdcalc("").code, 2);
  EXPECT_EQ(rbdcalc("--version").code, 0);
}

TEST(Cli, SwPrintsSignedValue) {
  const auto j = rbd::read_json_file(fixture(1, 3));
  const std::string K = "'" + j["K"].dump() + "'";
  const std::string H = "'" + j["H"].dump() + "'";
  auto r = rbdcalc("sw --config " + fixture(1, 3) + " --K " + K + " --H " + H);
  ASSERT_EQ(r.code, 0);
  const auto out = Json::parse(r.out);
  EXPECT_EQ(out["value"], 1);
  EXPECT_EQ(out["certificate"]["d"], 0);
  EXPECT_EQ(out["certificate"]["H_square"], 25);
  EXPECT_EQ(out["tool_version"], rbd::kToolVersion);
}

TEST(Cli, BlowdownReportsHomeoType) {
  auto r = rbdcalc("blowdown " + fixture(2, 5) + " --delta '" + rbd::read_json_file(fixture(2, 5))["delta"].dump() +
                   "' --h2 6 --h3 0");
  ASSERT_EQ(r.code, 0);
  const auto out = Json::parse(r.out);
  EXPECT_EQ(out["report"]["homeo_type"], "CP²#7CP̄²");
  EXPECT_EQ(out["report"]["handle_counts"], Json::parse("[1,0,7,0,1]"));
}

TEST(Cli, SearchA12IsEmpty) {
  auto r = rbdcalc("search --family 3-chain --a 12");
  ASSERT_EQ(r.code, 0);
  const auto last = Json::parse(r.out.substr(r.out.rfind('{', r.out.rfind("\"summary\""))));
  EXPECT_EQ(last["summary"]["count"], 0);
  EXPECT_EQ(last["summary"]["result"], "none within bounds");
}

TEST(Cli, ReproduceOnlyFilter) {
  auto r = rbdcalc("reproduce-paper --fixtures " + kFixtures.string() + " --only a=5,family=2");
  ASSERT_EQ(r.code, 0);
  const auto out = Json::parse(r.out);
  EXPECT_EQ(out["summary"]["cases"], 1);
  EXPECT_EQ(out["summary"]["all_passed"], true);
  EXPECT_EQ(rbdcalc("reproduce-paper --fixtures " + kFixtures.string() + " --only a=").code, 2);
}
