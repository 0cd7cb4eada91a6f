#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "joinpi/curve_document.hpp"
#include "test_util.hpp"

using namespace joinpi;
using joinpi::testing::data_path;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  std::string cmd = std::string(JOINPI_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(ExitCodes, Analyze) {
  EXPECT_EQ(run("analyze " + data_path("generic_sextic.json")).code, 0);
  EXPECT_EQ(run("analyze " + data_path("not_semi_generic.json")).code, 2);
  std::string bad = write_temp("joinpi_dup.json", R"J({"mode":"exact","f":"(y-1)*(y-1)","g":"x^2"})J");
  EXPECT_EQ(run("analyze " + bad).code, 1);
  std::string broken = write_temp("joinpi_broken.json", R"({"mode": "exact", "f": )");
  EXPECT_EQ(run("analyze " + broken).code, 1);
  EXPECT_EQ(run("analyze /nonexistent/file.json").code, 1);
}

TEST(ExitCodes, Verify) {
  EXPECT_EQ(run("verify --quiet " + data_path("outer_node_sextic.json")).code, 0);
  EXPECT_EQ(run("verify --quiet " + data_path("tampered_generic.json")).code, 3);
  EXPECT_EQ(run("verify --level abelian --quiet " + data_path("g_side_pattern.json")).code, 0);
}

TEST(Report, RoundTripsThroughJson) {
  CliRun r = run("analyze --json " + data_path("generic_sextic.json"));
  ASSERT_EQ(r.code, 0);
  Json report = Json::parse(r.out);
  EXPECT_EQ(report["schema"], "joinpi/1");
  EXPECT_EQ(Json::parse(report.dump()), report);
  EXPECT_EQ(report["pi1"]["affine"]["group"]["summary"], "Z");
  EXPECT_EQ(report["pi1"]["projective"]["group"]["summary"], "Z_6");
  EXPECT_EQ(report["genericity_verdict"]["kind"], "generic");
}

TEST(Report, VerifyJsonHasChecks) {
  CliRun r = run("verify --json --level abelian " + data_path("cusp_family_n1.json"));
  ASSERT_EQ(r.code, 0);
  Json report = Json::parse(r.out);
  EXPECT_TRUE(report["verification"]["passed"].get<bool>());
  EXPECT_FALSE(report["verification"]["checks"].empty());
  EXPECT_EQ(report["pi1"]["projective"]["group"]["abelianization"], "Z_6");
  EXPECT_EQ(report["pi1"]["affine"]["group"]["summary"], "B_3");
}

TEST(Gallery, FamilyCounts) {
  struct Case {
    std::string family;
    int n, degree, cusps, nodes;
  };
  for (const Case& c : {Case{"chebyshev-nodal", 1, 3, 0, 1}, Case{"chebyshev-nodal", 3, 7, 0, 15},
                        Case{"cusp-family", 2, 12, 24, 8}}) {
    CliRun g = run("gallery " + c.family + " " + std::to_string(c.n));
    ASSERT_EQ(g.code, 0) << c.family;
    std::string path = write_temp("joinpi_gallery.json", g.out);
    CliRun a = run("analyze --json " + path);
    ASSERT_EQ(a.code, 0) << c.family;
    Json report = Json::parse(a.out);
    EXPECT_EQ(report["singularities"]["degree"], c.degree) << c.family << c.n;
    EXPECT_EQ(report["singularities"]["cusp_count"], c.cusps) << c.family << c.n;
    EXPECT_EQ(report["singularities"]["node_count"], c.nodes) << c.family << c.n;
  }
}

TEST(Graph, DotOutput) {
  auto path = (std::filesystem::temp_directory_path() / "joinpi_graph.dot").string();
  std::filesystem::remove(path);
  CliRun r = run("graph --quiet --dot " + path + " " + data_path("cusp_family_n1_pattern.json"));
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path);
  ASSERT_TRUE(in);
  std::stringstream got, golden;
  got << in.rdbuf();
  golden << std::ifstream(std::string(JOINPI_GOLDEN) + "/cusp_family_n1.dot").rdbuf();
  EXPECT_EQ(got.str(), golden.str());
}

TEST(Stdin, ReadsDash) {
  CliRun r = run("analyze --json - < " + data_path("generic_sextic.json"));
  EXPECT_EQ(r.code, 0);
}
