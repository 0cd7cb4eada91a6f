#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "joinpi/curve_document.hpp"
#include "joinpi/curve_model.hpp"
#include "joinpi/expr_parser.hpp"
#include "test_util.hpp"

using namespace joinpi;
using joinpi::testing::P;
using joinpi::testing::Q;

namespace {

JoinTypeCurve generic_sextic_curve() {
  return JoinTypeCurve::exact(parse_factored_poly("(y+1)^2*y^3*(y-2)", 'y'),
                              parse_factored_poly("2*(x+1)*x^3*(x-1)^2", 'x'));
}

std::vector<Rational> ranks(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(ExponentData, GenericSextic) {
  ExponentData e = exponent_data(generic_sextic_curve());
  EXPECT_EQ(e.nu, (std::vector<int>{2, 3, 1}));
  EXPECT_EQ(e.lambda, (std::vector<int>{1, 3, 2}));
  EXPECT_EQ(e.nu0, 1);
  EXPECT_EQ(e.lambda0, 1);
  EXPECT_EQ(e.d, 6);
  EXPECT_EQ(e.dprime, 6);
}

TEST(ExponentData, PurePowers) {
  for (int p = 1; p <= 5; ++p)
    for (int q = 1; q <= 5; ++q) {
      auto c = JoinTypeCurve::exact(FactoredPoly(Q(1), {{Q(0), p}}), FactoredPoly(Q(1), {{Q(0), q}}));
      ExponentData e = exponent_data(c);
      EXPECT_EQ(e.nu0, p);
      EXPECT_EQ(e.lambda0, q);
    }
}

TEST(ExponentData, CuspFamilyFirstMember) {
  ExponentData e = exponent_data(cusp_family_pattern(1));
  EXPECT_EQ(e.nu, (std::vector<int>{3, 3}));
  EXPECT_EQ(e.lambda, (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(e.nu0, 3);
  EXPECT_EQ(e.lambda0, 2);
  EXPECT_EQ(e.d, 6);
  EXPECT_EQ(e.dprime, 6);
}

TEST(CriticalLocus, ClosedFormsOfTheGenericSextic) {
  CriticalLocus L = critical_locus(generic_sextic_curve());
  ASSERT_EQ(L.deltas.size(), 2u);
  ASSERT_EQ(L.gammas.size(), 2u);
  // Brackets must contain the roots of y^2 - y - 1 and 6x^2 + x - 3: the
  // quadratic changes sign across each bracket, and the closed forms agree.
  DensePoly qf = P({-1, -1, 1}), qg = P({-3, 1, 6});
  const double d[2] = {(1 - std::sqrt(5.0)) / 2, (1 + std::sqrt(5.0)) / 2};
  const double g[2] = {(-1 - std::sqrt(73.0)) / 12, (-1 + std::sqrt(73.0)) / 12};
  for (int k = 0; k < 2; ++k) {
    const auto& dl = L.deltas[static_cast<std::size_t>(k)].location;
    EXPECT_LT(qf.sign_at(dl.lo) * qf.sign_at(dl.hi), 0);
    EXPECT_NEAR(dl.mid().get_d(), d[k], 1e-12);
    const auto& gl = L.gammas[static_cast<std::size_t>(k)].location;
    EXPECT_LT(qg.sign_at(gl.lo) * qg.sign_at(gl.hi), 0);
    EXPECT_NEAR(gl.mid().get_d(), g[k], 1e-12);
  }
}

TEST(CriticalLocus, SingleRootHasNoInteriorCriticalPoint) {
  auto c = JoinTypeCurve::exact(parse_factored_poly("y^2", 'y'), parse_factored_poly("(x+1)*(x-1)", 'x'));
  EXPECT_TRUE(critical_locus(c).deltas.empty());
}

TEST(CriticalLocus, ValueOrderingOfTheGenericSextic) {
  CriticalLocus L = critical_locus(generic_sextic_curve());
  const auto& fd1 = L.deltas[0].value;
  const auto& fd2 = L.deltas[1].value;
  const auto& gg1 = L.gammas[0].value;
  const auto& gg2 = L.gammas[1].value;
  EXPECT_EQ(compare(fd2, gg1), -1);
  EXPECT_EQ(gg1.sign(), -1);
  EXPECT_EQ(fd1.sign(), 1);
  EXPECT_EQ(compare(fd1, gg2), -1);
  EXPECT_NEAR(gg1.approx(), -0.664, 1e-3);
  EXPECT_NEAR(fd1.approx(), 0.090, 1e-3);
}

TEST(CriticalValuePoly, Examples) {
  EXPECT_EQ(critical_value_poly(parse_factored_poly("y^2", 'y')), P({0, 1}));
  // y^3 - 3y: critical values +-2 (hand evaluation at y = +-1).
  DensePoly c = critical_value_poly(P({0, -3, 0, 1}));
  EXPECT_EQ(c, P({-4, 0, 1}));
  // Sylvester oracle for Res_y(p - t, p') at a few t.
  DensePoly p = P({0, -3, 0, 1});
  for (long t = -3; t <= 3; ++t)
    EXPECT_EQ(resultant(p - P({t}), derivative(p)) == 0, c(Q(t)) == 0);
  DensePoly cf = critical_value_poly(parse_factored_poly("(y+1)^2*y^3*(y-2)", 'y'));
  EXPECT_EQ(cf.degree(), 3);
  EXPECT_EQ(cf(Q(0)), 0);
}

TEST(CriticalValuePoly, DegreeMatchesDistinctCriticalValueCount) {
  std::mt19937 rng(17);
  for (int t = 0; t < 60; ++t) {
    FactoredPoly p = joinpi::testing::random_factored(rng, 1 + t % 5, 8);
    auto pts = interior_critical_points(p, pow2(-40));
    std::vector<AlgebraicValue> distinct;
    bool multiple = false;
    for (const auto& f : p.factors()) multiple |= f.multiplicity >= 2;
    if (multiple) distinct.push_back(AlgebraicValue::rational(Q(0)));
    for (const auto& cp : pts)
      if (std::none_of(distinct.begin(), distinct.end(), [&](const AlgebraicValue& v) { return compare(v, cp.value) == 0; }))
        distinct.push_back(cp.value);
    int bound = static_cast<int>(p.factors().size()) - 1 + (multiple ? 1 : 0);
    EXPECT_LE(static_cast<int>(distinct.size()), bound);
    int expect_degree = distinct.empty() ? 0 : static_cast<int>(distinct.size());
    EXPECT_EQ(critical_value_poly(p).degree(), expect_degree) << p.to_string('y');
  }
}

TEST(AlgebraicValue, SignCertificateAtFullRefinement) {
  std::mt19937 rng(19);
  for (int t = 0; t < 40; ++t) {
    FactoredPoly p = joinpi::testing::random_factored(rng, 2 + t % 4, 8);
    DensePoly e = expand(p);
    for (const auto& cp : interior_critical_points(p, pow2(-20))) {
      auto loc = refine_root(derivative(e), cp.location, pow2(-100));
      Interval img = evaluate(e, Interval{loc.lo, loc.hi});
      int s = img.lo > 0 ? 1 : (img.hi < 0 ? -1 : 0);
      EXPECT_EQ(s, cp.value.sign());
    }
  }
}

TEST(AlgebraicValue, CompareAndRefine) {
  DensePoly p = P({-2, 0, 1});
  AlgebraicValue r2(p, Q(1), Q(2));
  EXPECT_EQ(r2.sign(), 1);
  EXPECT_EQ(compare(r2, AlgebraicValue::rational(Q(7, 5))), 1);
  EXPECT_EQ(compare(r2, AlgebraicValue::rational(Q(3, 2))), -1);
  AlgebraicValue other(P({-8, 0, 4}), Q(0), Q(3));
  EXPECT_EQ(compare(r2, other), 0);
  EXPECT_LE(r2.refined(pow2(-30)).hi() - r2.refined(pow2(-30)).lo(), pow2(-30));
  EXPECT_THROW(AlgebraicValue(p, Q(-2), Q(2)), std::exception);  // two roots inside
}

TEST(Coincidences, GenericSexticHasNone) { EXPECT_TRUE(detect_coincidences(generic_sextic_curve()).pairs.empty()); }

TEST(Coincidences, IdenticalCriticalSets) {
  // Same cubic on both sides: every critical value is shared.
  auto c = JoinTypeCurve::exact(parse_factored_poly("(y+1)*y*(y-1)", 'y'), parse_factored_poly("(x+1)*x*(x-1)", 'x'));
  auto cs = detect_coincidences(c);
  EXPECT_EQ(cs.pairs, (std::vector<IndexPair>{{1, 1}, {2, 2}}));
}

TEST(Coincidences, CuspFamilyPairCount) {
  auto one = detect_coincidences(JoinTypeCurve::pattern(cusp_family_pattern(1)));
  EXPECT_EQ(one.pairs, (std::vector<IndexPair>{{1, 1}}));
  for (int n = 1; n <= 4; ++n)
    EXPECT_EQ(static_cast<int>(detect_coincidences(JoinTypeCurve::pattern(cusp_family_pattern(n))).pairs.size()),
              n * (3 * n - 2));
}

TEST(Coincidences, DeclaredModeChecksAssertions) {
  auto f = parse_factored_poly("59.6556159704885542188597763439*(y+1)*y^3*(y-1)", 'y');
  auto g = parse_factored_poly("(x+1)^2*x^3*(x-2)", 'x');
  auto ok = detect_coincidences(JoinTypeCurve::declared(f, g, {{2, 2}}));
  EXPECT_EQ(ok.pairs, (std::vector<IndexPair>{{2, 2}}));
  try {
    detect_coincidences(JoinTypeCurve::declared(f, g, {{1, 1}}));
    FAIL() << "false assertion accepted";
  } catch (const JoinpiError& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_input);
  }
  // c off by 1e-6 relative: far above the 1e-9 tolerance.
  auto bad = parse_factored_poly("59.6556756261*(y+1)*y^3*(y-1)", 'y');
  EXPECT_THROW(detect_coincidences(JoinTypeCurve::declared(bad, g, {{2, 2}})), JoinpiError);
  EXPECT_THROW(JoinTypeCurve::declared(f, g, {{3, 1}}), JoinpiError);
}

TEST(Coincidences, DeclaredModeWarnsOnUndeclaredNearMiss) {
  auto f = parse_factored_poly("59.6556159704885542188597763439*(y+1)*y^3*(y-1)", 'y');
  auto g = parse_factored_poly("(x+1)^2*x^3*(x-2)", 'x');
  auto cs = detect_coincidences(JoinTypeCurve::declared(f, g, {}));
  EXPECT_TRUE(cs.pairs.empty());
  EXPECT_FALSE(cs.warnings.empty());
}

TEST(Pattern, ChebyshevCubicIsValid) {
  PatternSpec p = chebyshev_nodal_pattern(1);
  EXPECT_EQ(p.f_values, ranks({1, -1}));
  EXPECT_EQ(p.g_values, ranks({1, -2}));
  EXPECT_NO_THROW(validate_pattern(p));
}

TEST(Pattern, CuspFamilyIsValid) {
  for (int n = 1; n <= 4; ++n) {
    PatternSpec p = cusp_family_pattern(n);
    EXPECT_NO_THROW(validate_pattern(p));
    for (std::size_t j = 0; j < p.f_values.size(); ++j) EXPECT_EQ(p.f_values[j], Q(j % 2 == 0 ? -1 : 1));
    for (std::size_t i = 0; i + 1 < p.g_values.size(); ++i) EXPECT_EQ(p.g_values[i], Q(-1));
    EXPECT_LT(p.g_values.back(), Q(-1));
  }
}

TEST(Pattern, SignConstraintViolation) {
  // nu = (1,1,1): f alternates, so two consecutive values of equal sign fail.
  PatternSpec p{{1, 1, 1}, {1, 1}, 1, 1, ranks({1, 1}), ranks({-1})};
  try {
    validate_pattern(p);
    FAIL() << "expected SignConstraintViolation";
  } catch (const JoinpiError& e) {
    EXPECT_EQ(e.code(), ErrorCode::sign_constraint);
    EXPECT_NE(std::string(e.what()).find("delta_2"), std::string::npos);
  }
}

TEST(Pattern, SignFormulaAgainstDirectEvaluation) {
  // sign(a) * (-1)^(sum of exponents to the right), against the sign of an
  // actual product form at the midpoint of each gap.
  std::mt19937 rng(23);
  for (int t = 0; t < 100; ++t) {
    FactoredPoly f = joinpi::testing::random_factored(rng, 2 + t % 5, 8);
    auto ex = f.multiplicities();
    for (std::size_t gap = 1; gap < f.factors().size(); ++gap) {
      Rational mid = (f.factors()[gap - 1].root + f.factors()[gap].root) / 2;
      EXPECT_EQ(interval_sign(sign(f.scale()), ex, gap), sign(f(mid)));
    }
  }
}

TEST(Chebyshev, Polynomials) {
  EXPECT_EQ(chebyshev(1), P({0, 1}));
  EXPECT_EQ(chebyshev(3), P({0, -3, 0, 4}));
  DensePoly t5 = chebyshev(5);
  EXPECT_EQ(t5, P({0, 5, 0, -20, 0, 16}));
  // Critical values at the interior critical points alternate +-1.
  auto crit = isolate_real_roots(derivative(t5));
  ASSERT_EQ(crit.size(), 4u);
  int expected = 1;
  for (const auto& r : crit) {
    auto tight = refine_root(derivative(t5), r, pow2(-50));
    EXPECT_NEAR(to_double(t5(tight.mid())), expected, 1e-12);
    expected = -expected;
  }
}

TEST(ValueOrder, ZeroAlwaysPresent) {
  auto c = JoinTypeCurve::exact(parse_factored_poly("(y+1)*(y-1)", 'y'), parse_factored_poly("(x+1)*(x-1)", 'x'));
  CurveAnalysis a = analyze_curve(c);
  const auto& z = a.values.classes[static_cast<std::size_t>(a.values.zero_class)];
  EXPECT_EQ(z.sign, 0);
  EXPECT_FALSE(z.in_f);
  EXPECT_FALSE(z.in_g);
}
