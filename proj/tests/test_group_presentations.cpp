#include <gtest/gtest.h>

#include <numeric>

#include "joinpi/group_presentations.hpp"

using namespace joinpi;

namespace {

// H1 straight from the relators: conjugation gives a_{k+p} = a_k, so the a's
// collapse to g = gcd(p, q) classes; w is p/g times their sum and w^r kills
// r*p/g times the sum.
InvariantFactors expected_h1(int p, int q, std::optional<int> r) {
  int g = std::gcd(p, q);
  InvariantFactors out;
  if (!r) {
    out.free_rank = g;
    return out;
  }
  out.free_rank = g - 1;
  long t = static_cast<long>(*r) * p / g;
  if (t == 0)
    out.free_rank = g;
  else if (t > 1)
    out.torsion.push_back(Integer(t));
  return out;
}

Presentation symmetric_group_3() {
  Presentation s;
  s.generators = {"a", "b"};
  s.relators = {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}};
  return s;
}

}  // namespace

TEST(Presentations, Gpq) {
  EXPECT_EQ(present_Gpq(3, 2).to_string(), "< w, a0, a1 | w^-1*a0*a1*a0, a1^-1*w*a0*w^-1, a0^-1*w*a1*w^-1 >");
  Presentation g11 = present_Gpq(1, 1);
  EXPECT_EQ(g11.generator_count(), 2u);
  EXPECT_EQ(g11.relators.size(), 2u);
  // G(2;2): w = a1 a0 and a0 = w a0 w^-1, so a0 commutes with a1.
  Presentation g22 = present_Gpq(2, 2);
  EXPECT_EQ(g22.relators.front(), (Word{-omega_letter(), a_letter(1), a_letter(0)}));
}

TEST(Presentations, GpqrAddsPowerOfOmega) {
  Presentation base = present_Gpq(3, 2);
  for (int n = 1; n <= 4; ++n) {
    Presentation p = present_Gpqr(3, 2, 2 * n);
    ASSERT_EQ(p.relators.size(), base.relators.size() + 1);
    EXPECT_EQ(p.relators.back(), Word(static_cast<std::size_t>(2 * n), omega_letter()));
  }
  EXPECT_EQ(present_Gpqr(4, 3, 1).relators.back(), Word{omega_letter()});
}

TEST(Presentations, FreeReduceAndInverse) {
  EXPECT_EQ(free_reduce({1, 2, -2, -1, 3}), Word{3});
  EXPECT_EQ(inverse({1, 2, -3}), (Word{3, -2, -1}));
}

TEST(Periods, Normalization) {
  for (int p = 1; p <= 4; ++p) {
    auto a = normalize_periods(p, {4, 6});
    EXPECT_EQ(a.p, p);
    EXPECT_EQ(a.q0, 2);
    EXPECT_EQ(normalize_periods(p, {5}).q0, 5);
    EXPECT_EQ(normalize_periods(p, {3, 5}).q0, 1);
  }
}

TEST(Classify, Gpq) {
  EXPECT_EQ(classify_Gpq(1, 7).tag, GroupTag::Z);
  EXPECT_EQ(classify_Gpq(7, 1).tag, GroupTag::Z);
  EXPECT_EQ(classify_Gpq(2, 2).tag, GroupTag::ZxZ);
  GroupClass b3 = classify_Gpq(3, 2);
  EXPECT_EQ(b3.tag, GroupTag::Braid3);
  EXPECT_FALSE(b3.abelian);
  EXPECT_EQ(b3.summary(), "B_3");
}

TEST(Classify, Gpqr) {
  GroupClass z6 = classify_Gpqr(1, 1, 6);
  EXPECT_EQ(z6.tag, GroupTag::CyclicFinite);
  EXPECT_EQ(z6.n, 6);
  EXPECT_EQ(z6.summary(), "Z_6");
  // r = q with gcd(p, q) = 1 selects the free product even though gcd(q, r) != 1.
  GroupClass fp = classify_Gpqr(5, 3, 3);
  EXPECT_EQ(fp.tag, GroupTag::FreeProduct);
  EXPECT_EQ(fp.summary(), "Z_5*Z_3");
  GroupClass zz = classify_Gpqr(2, 4, 3);
  EXPECT_EQ(zz.tag, GroupTag::ZxZn);
  EXPECT_EQ(zz.n, 3);
  EXPECT_EQ(classify_Gpqr(1, 4, 5).tag, GroupTag::CyclicFinite);
  EXPECT_EQ(classify_Gpqr(1, 4, 5).n, 5);
  EXPECT_EQ(classify_Gpqr(5, 3, 1).n, 5);
}

TEST(Abelianize, ClosedFormOracle) {
  for (int p = 1; p <= 12; ++p)
    for (int q = 1; q <= 12; ++q) {
      EXPECT_EQ(abelianize(present_Gpq(p, q)), expected_h1(p, q, std::nullopt)) << p << "," << q;
      EXPECT_EQ(abelianize(present_Gpq(p, q)).free_rank, std::gcd(p, q));
      for (int r : {1, 2, 5, 6})
        EXPECT_EQ(abelianize(present_Gpqr(p, q, r)), expected_h1(p, q, r)) << p << "," << q << "," << r;
    }
}

TEST(Abelianize, Examples) {
  InvariantFactors z6 = abelianize(present_Gpqr(1, 1, 6));
  EXPECT_EQ(z6.free_rank, 0);
  EXPECT_EQ(z6.torsion, std::vector<Integer>{Integer(6)});
  for (int n = 1; n <= 4; ++n) {
    InvariantFactors h = abelianize(present_Gpqr(3, 2, 2 * n));
    EXPECT_EQ(h.free_rank, 0);
    EXPECT_EQ(h.torsion, std::vector<Integer>{Integer(6 * n)});
  }
  EXPECT_EQ(z6.to_string(), "Z_6");
}

TEST(Smith, Diagonal) {
  std::vector<std::vector<Integer>> m = {{Integer(2), Integer(4)}, {Integer(6), Integer(8)}};
  auto d = smith_diagonal(m);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0], 2);
  EXPECT_EQ(d[1], 4);
}

TEST(Cosets, KnownOrders) {
  EXPECT_EQ(coset_enumerate(symmetric_group_3()).order, 6);
  CosetResult z6 = coset_enumerate(present_Gpqr(1, 1, 6));
  ASSERT_TRUE(z6.closed);
  EXPECT_EQ(z6.order, 6);
  for (int q = 1; q <= 5; ++q)
    for (int r = 1; r <= 5; ++r) EXPECT_EQ(coset_enumerate(present_Gpqr(1, q, r), 10000).order, r);
  EXPECT_EQ(coset_enumerate(present_Gpqr(5, 3, 1), 10000).order, 5);
}

TEST(Cosets, TableIsConsistent) {
  CosetResult r = coset_enumerate(symmetric_group_3());
  ASSERT_TRUE(r.closed);
  for (int c = 0; c < r.order; ++c)
    for (const auto& w : symmetric_group_3().relators) EXPECT_EQ(r.table.trace(c, w), c);
}

TEST(Cosets, OverflowIsReported) {
  CosetResult r = coset_enumerate(present_Gpq(2, 2), 200);  // Z x Z
  EXPECT_FALSE(r.closed);
}

TEST(OmegaAsWord, Instances) {
  EXPECT_TRUE(verify_prop26(3, 2, 1));
  EXPECT_TRUE(verify_prop26(2, 2, 0));
  EXPECT_TRUE(verify_prop26(4, 6, 3));
}
