#include <gtest/gtest.h>
#include <json.hpp>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + YM2D_CLI_PATH + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST(Cli, ZetaRiemann) {
  const auto r = run("zeta --N 2 --s 2");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 2u);
  const double lo = std::stod(rows[1][2]), hi = std::stod(rows[1][3]);
  const double z2 = std::numbers::pi * std::numbers::pi / 6;
  EXPECT_LE(lo, z2);
  EXPECT_GE(hi, z2);
}

TEST(Cli, ZetaTargetWidth) {
  const auto r = run("zeta --N 1..6 --s 2 --target-width 1e-6");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 7u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LE(std::stod(rows[i][4]), 1e-6);
}

TEST(Cli, ZetaRejectsSmallS) {
  const auto r = run("zeta --N 5 --s 0.9");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("s must exceed 1"), std::string::npos);
}

TEST(Cli, ZnExamples) {
  const auto a = run("zn --orientable --genus 2 --group su --N 2 --area 0");
  ASSERT_EQ(a.code, 0) << a.out;
  const auto rows = parse_csv(a.out);
  const double z2 = std::numbers::pi * std::numbers::pi / 6;
  EXPECT_LE(std::stod(rows[1][5]), z2);
  EXPECT_GE(std::stod(rows[1][6]), z2);

  const auto b = run("zn --orientable --genus 1 --group su --N 1 --q 0.5");
  ASSERT_EQ(b.code, 0);
  const auto r1 = parse_csv(b.out);
  EXPECT_EQ(r1[1][5], "1");
  EXPECT_EQ(r1[1][6], "1");

  EXPECT_EQ(run("zn --non-orientable --genus 1 --N 3 --q 0.5").code, 2);
  EXPECT_EQ(run("zn --orientable --genus 2 --group u --N 3 --area 0").code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("zn --genus 2 --N 3 --area 1 --q 0.5").code, 1);
  EXPECT_EQ(run("zn --genus 2 --N 3").code, 1);
  EXPECT_EQ(run("sweep --genus 2 --area 0 --N ''").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("zn --genus 2 --N 3 --q 1.5").code, 1);
  EXPECT_EQ(run("verify --suite nope").code, 1);
}

TEST(Cli, Deterministic) {
  const std::string args = "converge --genus 1 --group u --q 0.5 --N 5,10,20 --format json";
  const auto a = run(args), b = run(args), c = run(args, "YM2_THREADS=3");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST(Cli, CsvAndJsonAgree) {
  const std::string base = "zn --non-orientable --genus 2 --group u --q 0.5 --N 3..6";
  const auto csv = run(base);
  const auto js = run(base + " --format json");
  ASSERT_EQ(csv.code, 0);
  ASSERT_EQ(js.code, 0);
  const auto rows = parse_csv(csv.out);
  const auto j = nlohmann::json::parse(js.out);
  ASSERT_EQ(j["rows"].size() + 1, rows.size());
  EXPECT_EQ(j["config"]["group"], "u");
  for (std::size_t i = 0; i < j["rows"].size(); ++i) {
    const auto& jr = j["rows"][i];
    EXPECT_EQ(std::stoll(rows[i + 1][0]), jr["N"].get<long long>());
    EXPECT_EQ(std::stod(rows[i + 1][5]), jr["lower"].get<double>());
    EXPECT_EQ(std::stod(rows[i + 1][6]), jr["upper"].get<double>());
    EXPECT_EQ(std::stod(rows[i + 1][2]), jr["area"].get<double>());
  }
}

TEST(Cli, VerifyReports) {
  const auto a = run("verify --seed 7 --cases 300 --report json");
  const auto b = run("verify --seed 7 --cases 300 --report json");
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  const auto fs = run("verify --suite fs --report json");
  ASSERT_EQ(fs.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(fs.out).contains("unitary_fs_diagnostic"));
}

TEST(Cli, Sweep) {
  const auto r = run("sweep --genus 2 --area 0 --group su --N 2..10");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("violated"), std::string::npos);
  const auto u = run("sweep --genus 3 --area 0.5 --group u --N 2..8");
  ASSERT_EQ(u.code, 0);
  EXPECT_EQ(u.out.find("violated"), std::string::npos);
}

TEST(Cli, ConvergeGapsShrink) {
  const auto r = run("converge --genus 2 --group su --area 1 --N 2..12");
  ASSERT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  for (std::size_t i = 2; i < rows.size(); ++i)
    EXPECT_LT(std::stod(rows[i][5]), std::stod(rows[i - 1][6]));
}
