#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "qlink/agsum.hpp"
#include "qlink/json_io.hpp"
#include "qlink/lpi.hpp"
#include "test_util.hpp"

using namespace qlink;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QLINK_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("verify").status, 2);
  EXPECT_EQ(run("verify S21 --order -1").status, 2);
  EXPECT_EQ(run("verify S21 --order abc").status, 2);
  EXPECT_EQ(run("verify no-such-check").status, 2);
  EXPECT_EQ(run("enumerate --stats bogus").status, 2);
  EXPECT_EQ(run("enumerate --exclude-smallest 0").status, 2);
  EXPECT_EQ(run("derive").status, 2);
  EXPECT_EQ(run("derive --preset schur-mod6 --config x.json").status, 2);
  EXPECT_EQ(run("evaluate --preset S99").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, VerifyPreset) {
  const auto r = run("verify S21 --order 20");
  EXPECT_EQ(r.status, 0);
  const auto l = lines(r.out);
  ASSERT_FALSE(l.empty());
  EXPECT_EQ(l.front().rfind("PASS S21", 0), 0u) << r.out;
  EXPECT_EQ(l.back(), "1/1 checks passed at order 20");
}

TEST(Cli, VerifyJson) {
  const auto r = run("verify ideal --order 15 --json");
  EXPECT_EQ(r.status, 0);
  const auto j = Json::parse(r.out);
  ASSERT_TRUE(j.contains("checks"));
  EXPECT_GT(j["checks"].size(), 3u);
  for (const auto& c : j["checks"]) EXPECT_TRUE(c["passed"].get<bool>()) << c.dump();
  EXPECT_TRUE(j["passed"].get<bool>());
}

TEST(Cli, Enumerate) {
  auto r = run("enumerate --max 6");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(lines(r.out).back(), "9 partitions of weight <= 6");

  r = run("enumerate --max 5 --exclude-smallest 1,2,3");
  EXPECT_EQ(r.status, 0);
  auto l = lines(r.out);
  ASSERT_EQ(l.size(), 4u);
  EXPECT_EQ(std::set<std::string>(l.begin(), l.end() - 1), (std::set<std::string>{"()", "(4)", "(5)"}));

  r = run("enumerate --max 8 --stats even --json");
  EXPECT_EQ(r.status, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["count"], j["partitions"].size());
  EXPECT_EQ(series_from_json(j["gf"]), gf_from_enumeration(8, {}, StatSpec::even_parts()));
}

TEST(Cli, DerivePreset) {
  auto r = run("derive --preset schur-mod6 --order 20");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("proportional to the printed equation: yes"), std::string::npos) << r.out;
  r = run("derive --preset schur-mod3 --order 20 --json");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(Json::parse(r.out)["residual_zero"].get<bool>());
}

TEST(Cli, DeriveFromConfig) {
  const auto ok = write_temp("qlink_ideal_ok.json", ideal_to_json(schur_mod3_preset()).dump());
  EXPECT_EQ(run("derive --config " + ok + " --order 15").status, 0);

  auto j = ideal_to_json(schur_mod3_preset());
  j["linking"]["4"] = Json::array({2});
  const auto bad = write_temp("qlink_ideal_bad.json", j.dump());
  EXPECT_EQ(run("derive --config " + bad).status, 2);
  EXPECT_EQ(run("derive --config " + ::testing::TempDir() + "qlink_missing.json").status, 2);
}

TEST(Cli, EvaluateMatchesLibraryAndIsDeterministic) {
  const auto a = run("evaluate --preset S21 --order 12 --json");
  const auto b = run("evaluate --preset S21 --order 12 --json");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(series_from_json(Json::parse(a.out)), ag_evaluate(preset(PresetId::S21).spec, 12));

  const auto c = run("evaluate --preset S21 --order 8 --coefficient 1 --json");
  EXPECT_EQ(series_from_json(Json::parse(c.out)), x_coefficient(ag_evaluate(preset(PresetId::S21).spec, 8), 1));
}

TEST(Cli, EvaluateConfigErrors) {
  AGSpec flat;
  flat.r = 1;
  flat.Q = {{Rational(0)}};
  flat.L2 = {Rational(0)};
  flat.L1 = {0};
  flat.wx = {1};
  flat.wy = {0};
  flat.bases = {1};
  const auto nonterm = write_temp("qlink_ag_flat.json", agspec_to_json(flat).dump());
  EXPECT_EQ(run("evaluate --config " + nonterm + " --order 5").status, 2);

  flat.Q = {{Rational(1, 2)}};
  const auto half = write_temp("qlink_ag_half.json", agspec_to_json(flat).dump());
  EXPECT_EQ(run("evaluate --config " + half + " --order 5").status, 2);

  const auto good = write_temp("qlink_ag_good.json", agspec_to_json(preset(PresetId::KUR).spec).dump());
  EXPECT_EQ(run("evaluate --config " + good + " --order 10").status, 0);
}
