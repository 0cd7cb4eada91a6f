#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "joinpi/curve_model.hpp"
#include "joinpi/expr_parser.hpp"
#include "test_util.hpp"

using namespace joinpi;
using joinpi::testing::P;
using joinpi::testing::Q;
using joinpi::testing::sylvester_resultant;

TEST(Expand, Monomial) { EXPECT_EQ(expand(parse_factored_poly("y^2", 'y')), P({0, 0, 1})); }

TEST(Expand, NegatedLinear) { EXPECT_EQ(expand(FactoredPoly(Q(-1), {{Q(1), 1}})), P({1, -1})); }

TEST(Expand, SexticAgreesWithFactoredForm) {
  FactoredPoly g = parse_factored_poly("2*(x+1)*x^3*(x-1)^2", 'x');
  DensePoly e = expand(g);
  EXPECT_EQ(e.degree(), 6);
  EXPECT_EQ(e(Q(2)), Q(48));
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> n(-50, 50), d(1, 9);
  for (int k = 0; k < 5; ++k) {
    Rational x(n(rng), d(rng));
    x.canonicalize();
    EXPECT_EQ(e(x), g(x));
  }
}

TEST(Derivative, Basics) {
  EXPECT_EQ(derivative(P({0, 0, 1})), P({0, 2}));
  EXPECT_TRUE(derivative(P({5})).is_zero());
}

TEST(Derivative, InteriorCriticalPointsOfTheSextics) {
  // f' / ((y+1) y^2) is proportional to y^2 - y - 1.
  DensePoly fp = derivative(expand(parse_factored_poly("(y+1)^2*y^3*(y-2)", 'y')));
  DensePoly rf = exact_quotient(fp, P({0, 0, 1, 1}));
  EXPECT_EQ(rf.monic(), P({-1, -1, 1}));
  // g' / (x^2 (x-1)) is proportional to 6x^2 + x - 3; the simple root -1 drops out.
  DensePoly gp = derivative(expand(parse_factored_poly("2*(x+1)*x^3*(x-1)^2", 'x')));
  DensePoly rg = exact_quotient(gp, P({0, 0, -1, 1}));
  EXPECT_EQ(rg.monic(), P({-3, 1, 6}).monic());
}

TEST(Gcd, Basics) {
  EXPECT_EQ(poly_gcd(P({-1, 0, 1}), P({-1, 1})), P({-1, 1}));
  EXPECT_EQ(poly_gcd(P({-2, 0, 1}), P({-3, 0, 1})), P({1}));
}

TEST(Gcd, CriticalValuePolysOfGenericSexticShareOnlyZero) {
  // Multiple roots make 0 a critical value on both sides; nothing else is shared.
  DensePoly cf = critical_value_poly(parse_factored_poly("(y+1)^2*y^3*(y-2)", 'y'));
  DensePoly cg = critical_value_poly(parse_factored_poly("2*(x+1)*x^3*(x-1)^2", 'x'));
  EXPECT_EQ(poly_gcd(cf, cg).monic(), P({0, 1}));
}

TEST(Resultant, AgreesWithSylvesterDeterminant) {
  EXPECT_EQ(resultant(P({-1, 0, 1}), P({-2, 1})), Q(3));
  EXPECT_EQ(sylvester_resultant(P({-1, 0, 1}), P({-2, 1})), Q(3));
  EXPECT_EQ(resultant(P({-2, 0, 1}), P({-2, 0, 1})), Q(0));
  // Res(x - a, x - b) from the 2x2 Sylvester determinant [[1, -a], [1, -b]].
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      Rational r = resultant(P({-a, 1}), P({-b, 1}));
      EXPECT_EQ(r, sylvester_resultant(P({-a, 1}), P({-b, 1})));
      EXPECT_EQ(r, Q(a - b));
    }
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-6, 6), deg(1, 5);
  for (int t = 0; t < 60; ++t) {
    std::vector<Rational> a, b;
    int da = deg(rng), db = deg(rng);
    for (int k = 0; k <= da; ++k) a.emplace_back(k == da ? (c(rng) | 1) : c(rng));
    for (int k = 0; k <= db; ++k) b.emplace_back(k == db ? (c(rng) | 1) : c(rng));
    DensePoly pa(a), pb(b);
    EXPECT_EQ(resultant(pa, pb), sylvester_resultant(pa, pb)) << pa.to_string() << " / " << pb.to_string();
  }
}

TEST(SquareFree, Decomposition) {
  DensePoly p = expand(parse_factored_poly("(x+1)^2*x^3*(x-2)", 'x'));
  EXPECT_EQ(square_free_part(p), expand(parse_factored_poly("(x+1)*x*(x-2)", 'x')));
  auto parts = square_free_decomposition(p);
  ASSERT_GE(parts.size(), 3u);
  EXPECT_EQ(parts[0], P({-2, 1}));
  EXPECT_EQ(parts[1], P({1, 1}));
  EXPECT_EQ(parts[2], P({0, 1}));
}

TEST(Isolate, SqrtTwo) {
  auto roots = isolate_real_roots(P({-2, 0, 1}));
  ASSERT_EQ(roots.size(), 2u);
  // Sturm count oracle on the reported brackets and on the textbook brackets.
  SturmSequence s(P({-2, 0, 1}));
  EXPECT_EQ(s.count(Q(1), Q(3, 2)), 1);
  EXPECT_EQ(s.count(Q(-3, 2), Q(-1)), 1);
  for (const auto& r : roots) {
    EXPECT_EQ(s.count(r.lo, r.hi), 1);
    EXPECT_EQ(r.multiplicity, 1);
  }
  // Brackets are disjoint and each straddles a sign change of x^2 - 2.
  EXPECT_LE(roots[0].hi, roots[1].lo);
  DensePoly p = P({-2, 0, 1});
  for (const auto& r : roots) EXPECT_LT(p.sign_at(r.lo) * p.sign_at(r.hi), 0);
  EXPECT_TRUE(roots[0].lo.get_d() < -std::sqrt(2.0) && -std::sqrt(2.0) < roots[0].hi.get_d());
}

TEST(Isolate, DoubleRootAtZero) {
  auto roots = isolate_real_roots(P({0, 0, 1}));
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_EQ(roots[0].multiplicity, 2);
  EXPECT_TRUE(roots[0].lo <= 0 && 0 <= roots[0].hi);
}

TEST(Isolate, CriticalPointsOfG) {
  auto roots = isolate_real_roots(P({-3, 1, 6}));
  ASSERT_EQ(roots.size(), 2u);
  // (-1 -+ sqrt 73) / 12 lie in the brackets; 6x^2 + x - 3 changes sign across each.
  const double closed[2] = {(-1 - std::sqrt(73.0)) / 12, (-1 + std::sqrt(73.0)) / 12};
  DensePoly p = P({-3, 1, 6});
  for (int k = 0; k < 2; ++k) {
    EXPECT_LT(p.sign_at(roots[k].lo) * p.sign_at(roots[k].hi), 0);
    EXPECT_TRUE(roots[k].lo.get_d() < closed[k] && closed[k] < roots[k].hi.get_d());
  }
}

TEST(Refine, SqrtTwoToWidth) {
  DensePoly p = P({-2, 0, 1});
  auto r = refine_root(p, isolate_real_roots(p)[1], Q(1, 1024));
  EXPECT_LE(r.width(), Q(1, 1024));
  // Bisection oracle: sign change across the bracket.
  EXPECT_LT(p(r.lo) * p(r.hi), 0);
  EXPECT_NEAR(r.approx(), std::sqrt(2.0), 1.0 / 1024);
}

TEST(Refine, DoubleRootShrinksAroundZero) {
  DensePoly p = P({0, 0, 1});
  auto r = refine_root(p, isolate_real_roots(p)[0], Q(1, 4096));
  EXPECT_LE(r.width(), Q(1, 4096));
  EXPECT_TRUE(r.lo <= 0 && 0 <= r.hi);
}

TEST(Refine, SignOfGStabilizesAtCriticalPoints) {
  DensePoly g = expand(parse_factored_poly("2*(x+1)*x^3*(x-1)^2", 'x'));
  DensePoly c = P({-3, 1, 6});
  for (const auto& r0 : isolate_real_roots(c)) {
    int last = 0;
    for (int bits = 4; bits <= 64; bits += 4) {
      auto r = refine_root(c, r0, pow2(-bits));
      Interval v = evaluate(g, Interval{r.lo, r.hi});
      if (v.lo > 0 || v.hi < 0) {
        int s = v.lo > 0 ? 1 : -1;
        if (last != 0) {
          EXPECT_EQ(s, last);
        }
        last = s;
      }
    }
    EXPECT_NE(last, 0);
  }
}

TEST(Isolate, RoundTripOnRandomFactoredPolys) {
  std::mt19937 rng(13);
  for (int t = 0; t < 50; ++t) {
    FactoredPoly f = joinpi::testing::random_factored(rng, 1 + t % 6, 8);
    auto roots = isolate_real_roots(expand(f));
    ASSERT_EQ(roots.size(), f.factors().size());
    for (std::size_t k = 0; k < roots.size(); ++k) {
      EXPECT_TRUE(roots[k].lo <= f.factors()[k].root && f.factors()[k].root <= roots[k].hi);
      EXPECT_EQ(roots[k].multiplicity, f.factors()[k].multiplicity);
    }
  }
}
