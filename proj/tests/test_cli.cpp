#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + SKORODIST_BIN + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[512];
  while (std::fgets(buf, sizeof buf, pipe)) r.out += buf;
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(SKORODIST_DATA) + "/" + name; }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Cli, DistForcedPairing) {
  const auto r = run("dist " + data("point_a.json") + " " + data("point_b.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("value 0.3\n"), std::string::npos);
  EXPECT_NE(r.out.find("error_bar 0\n"), std::string::npos);
}

TEST(Cli, MalformedJsonIsInputError) {
  const auto file = std::filesystem::temp_directory_path() / "skorodist_cli_bad.json";
  std::ofstream(file) << "{\"space\": \"R\", ";
  EXPECT_EQ(run("dist " + file.string() + " " + data("point_a.json")).code, 2);
  std::filesystem::remove(file);
  EXPECT_EQ(run("dist " + data("missing.json") + " " + data("point_a.json")).code, 2);
  EXPECT_EQ(run("dist --variant nope " + data("point_a.json") + " " + data("point_b.json")).code, 2);
}

TEST(Cli, BudgetExceeded) {
  EXPECT_EQ(run("gen noop --m 2", "SKORODIST_BUDGET=1").code, 3);
  EXPECT_EQ(run("gen noop --m 2").code, 0);
}

TEST(Cli, ConvergeCsv) {
  const auto r = run("converge --eta 0.005 " + data("indicators") + " " + data("limit.json"));
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 4u);
  EXPECT_EQ(ls[0], "n,distance,error_bar");
  double prev = 1e9;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const double d = std::stod(ls[i].substr(ls[i].find(',') + 1));
    EXPECT_LT(d, prev);
    prev = d;
  }
  EXPECT_LT(prev, 0.1);
}

TEST(Cli, DiagnoseStaircases) {
  EXPECT_NE(run("diagnose --mode j1 " + data("staircases")).out.find("not-precompact"), std::string::npos);
  EXPECT_NE(run("diagnose --mode m1 " + data("staircases")).out.find("consistent-with-precompact"), std::string::npos);
}

TEST(Cli, AxiomsClean) {
  EXPECT_EQ(run("axioms --mode m1 --dim 3 --triples 200").code, 0);
  EXPECT_EQ(run("axioms --mode j1 --triples 200").code, 0);
}

TEST(Cli, MatrixIsSymmetric) {
  const auto r = run("matrix --threads 2 " + data("point_a.json") + " " + data("point_b.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0.3"), std::string::npos);
}
