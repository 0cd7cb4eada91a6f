#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <regex>
#include <sstream>

#include "joinpi/bifurcation_graph.hpp"
#include "joinpi/curve_document.hpp"
#include "joinpi/expr_parser.hpp"
#include "test_util.hpp"

using namespace joinpi;
using joinpi::testing::data_path;

namespace {

CurveAnalysis load(const std::string& name) { return analyze_curve(read_curve_document(data_path(name)).curve); }

std::vector<std::size_t> branch_counts(const BifurcationGraph& g) {
  std::vector<std::size_t> out;
  for (const auto& s : g.satellites) out.push_back(s.branches.size());
  return out;
}

int count(const std::string& text, const std::string& pattern) {
  std::regex re(pattern);
  return static_cast<int>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

}  // namespace

TEST(Sigma, GenericSexticOrder) {
  CurveAnalysis a = load("generic_sextic.json");
  BambooGraph s = build_sigma(a);
  ASSERT_EQ(s.size(), 5u);
  EXPECT_EQ(s.zero_index, 2);
  // f(d2) < g(g1) < 0 < f(d1) < g(g2)
  EXPECT_EQ(s.vertices[0].deltas, std::vector<int>{2});
  EXPECT_EQ(s.vertices[1].gammas, std::vector<int>{1});
  EXPECT_EQ(s.vertices[3].deltas, std::vector<int>{1});
  EXPECT_EQ(s.vertices[4].gammas, std::vector<int>{2});
  for (std::size_t k = 0; k + 1 < s.size(); ++k) EXPECT_LT(s.vertices[k].approx, s.vertices[k + 1].approx);
}

TEST(Sigma, DegenerateSingleVertex) {
  auto c = JoinTypeCurve::exact(parse_factored_poly("y^2", 'y'), parse_factored_poly("x^2", 'x'));
  BambooGraph s = build_sigma(analyze_curve(c));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_TRUE(s.degenerate());
  EXPECT_EQ(s.v_minus().sign, 0);
  EXPECT_EQ(s.v_plus().sign, 0);
}

TEST(Sigma, CuspFamilyVertices) {
  // {g(gamma_{3n-1}), -1, 0, +1}; for n = 1 there is no even delta, so +1 is absent.
  EXPECT_EQ(build_sigma(analyze_curve(JoinTypeCurve::pattern(cusp_family_pattern(1)))).size(), 3u);
  for (int n = 2; n <= 4; ++n) {
    BambooGraph s = build_sigma(analyze_curve(JoinTypeCurve::pattern(cusp_family_pattern(n))));
    ASSERT_EQ(s.size(), 4u) << n;
    EXPECT_EQ(*s.vertices[0].rank, Rational(-2));
    EXPECT_EQ(*s.vertices[1].rank, Rational(-1));
    EXPECT_EQ(s.vertices[2].sign, 0);
    EXPECT_EQ(*s.vertices[3].rank, Rational(1));
    EXPECT_EQ(static_cast<int>(s.vertices[1].gammas.size()), 3 * n - 2);
    EXPECT_EQ(static_cast<int>(s.vertices[1].deltas.size()), n);
  }
}

TEST(Gamma, BranchCounts) {
  EXPECT_EQ(branch_counts(build_gamma(load("generic_sextic.json"))), (std::vector<std::size_t>{2, 6, 4}));
  EXPECT_EQ(branch_counts(build_gamma(load("outer_node_sextic.json"))), (std::vector<std::size_t>{4, 6, 2}));
}

TEST(Gamma, SpecialVertexCount) {
  BifurcationGraph g = build_gamma(load("generic_sextic.json"));
  EXPECT_EQ(special_vertex_count(g), 15);
}

TEST(Gamma, CoveringDegreeAndGluing) {
  for (const char* name : {"generic_sextic.json", "outer_node_sextic.json", "cusp_family_n1.json", "g_side_pattern.json"}) {
    CurveAnalysis a = load(name);
    BifurcationGraph g = build_gamma(a);
    EXPECT_TRUE(covering_degree_ok(g)) << name;
    EXPECT_TRUE(gluing_ok(g, a)) << name;
  }
}

TEST(Gamma, CoveringDegreeOnRandomCurves) {
  std::mt19937 rng(29);
  for (int t = 0; t < 40; ++t) {
    auto f = joinpi::testing::random_factored(rng, 1 + t % 4, 6);
    auto g = joinpi::testing::random_factored(rng, 1 + (t / 4) % 4, 6);
    CurveAnalysis a = analyze_curve(JoinTypeCurve::exact(f, g));
    EXPECT_TRUE(covering_degree_ok(build_gamma(a))) << f.to_string('y') << " = " << g.to_string('x');
  }
}

TEST(Regular, Satellites) {
  EXPECT_EQ(regular_satellites(load("generic_sextic.json")), (std::vector<int>{1, 2, 3}));
  auto r45 = regular_satellites(load("outer_node_sextic.json"));
  EXPECT_NE(std::find(r45.begin(), r45.end(), 1), r45.end());
  for (int n = 1; n <= 4; ++n)
    EXPECT_EQ(regular_satellites(analyze_curve(JoinTypeCurve::pattern(cusp_family_pattern(n)))),
              std::vector<int>{3 * n});
}

TEST(Genericity, Verdicts) {
  auto v44 = genericity_verdict(load("generic_sextic.json"));
  EXPECT_EQ(v44.kind, GenericityKind::generic);
  auto v45 = genericity_verdict(load("outer_node_sextic.json"));
  EXPECT_EQ(v45.kind, GenericityKind::semi_generic);
  EXPECT_TRUE(v45.semi_generic_wrt_g());
  auto gside = genericity_verdict(load("g_side_pattern.json"));
  EXPECT_EQ(gside.kind, GenericityKind::semi_generic);
  EXPECT_TRUE(gside.semi_generic_wrt_g());
  EXPECT_FALSE(gside.semi_generic_wrt_f());
  EXPECT_EQ(gside.wrt, Side::g);
  auto none = genericity_verdict(load("not_semi_generic.json"));
  EXPECT_EQ(none.kind, GenericityKind::not_semi_generic);
  EXPECT_EQ(none.wrt, Side::none);
}

TEST(Dot, GenericSexticStructure) {
  std::string dot = export_dot(build_gamma(load("generic_sextic.json")));
  EXPECT_EQ(count(dot, R"(shape=star)"), 3);
  EXPECT_EQ(count(dot, R"(label="B\d+,\d+")"), 12);
  EXPECT_EQ(dot.rfind("digraph Gamma {", 0), 0u);
}

TEST(Dot, DegenerateSigmaSingleNode) {
  auto c = JoinTypeCurve::exact(parse_factored_poly("y^2", 'y'), parse_factored_poly("x^2", 'x'));
  std::string dot = export_dot(build_gamma(analyze_curve(c)));
  EXPECT_EQ(count(dot, R"(shape=star)"), 1);
  EXPECT_EQ(count(dot, R"(->)"), 0);
}

TEST(Dot, GoldenCuspFamily) {
  std::ifstream in(std::string(JOINPI_GOLDEN) + "/cusp_family_n1.dot");
  ASSERT_TRUE(in);
  std::stringstream golden;
  golden << in.rdbuf();
  EXPECT_EQ(export_dot(build_gamma(load("cusp_family_n1_pattern.json"))), golden.str());
}
