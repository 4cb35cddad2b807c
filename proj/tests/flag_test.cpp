#include "pantsbd/flag.hpp"

#include <gtest/gtest.h>

#include "pantsbd/veronese.hpp"
#include "support/test_support.hpp"

namespace pantsbd {
namespace {

using testing::q;

VecN vec(std::initializer_list<std::int64_t> xs) {
  VecN v;
  for (auto x : xs) v.push_back(q(x));
  return v;
}

Flag veronese(const Scalar& r, int n) { return flag_curve(ProjPoint::finite(r), n); }
Flag veronese_inf(int n) { return flag_curve(ProjPoint::infinity(Backend::exact), n); }

TEST(WedgeDetTest, Examples) {
  EXPECT_EQ(wedge_det(std::vector<VecN>{vec({1, 0}), vec({0, 1})}), q(1));
  EXPECT_EQ(wedge_det(std::vector<VecN>{vec({1, 1}), vec({3, 1})}), q(-2));
  EXPECT_EQ(wedge_det(std::vector<VecN>{vec({1, 0, 0}), vec({1, 0, 0}), vec({0, 0, 1})}), q(0));
}

TEST(WedgeDetTest, RejectsBadShape) {
  EXPECT_THROW((void)wedge_det(std::vector<VecN>{vec({1, 0})}), DomainError);
  EXPECT_THROW((void)wedge_det(std::vector<VecN>{vec({1, 0, 0}), vec({0, 1, 0})}), DomainError);
}

TEST(WedgeDetTest, MatchesLeibnizOracle) {
  testing::Rng rng(3);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<VecN> cols(static_cast<std::size_t>(n));
      for (auto& c : cols) {
        for (int i = 0; i < n; ++i) c.push_back(rng.rational(-5, 5, 6));
      }
      // Force some zero pivots.
      if (trial % 4 == 0) cols[0][0] = q(0);
      EXPECT_EQ(wedge_det(cols).exact_value(), testing::leibniz_wedge(cols));
    }
  }
}

TEST(WedgeDetTest, AlternatingMultilinear) {
  testing::Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 6));
    std::vector<VecN> cols(static_cast<std::size_t>(n));
    for (auto& c : cols) {
      for (int i = 0; i < n; ++i) c.push_back(rng.rational(-5, 5, 3));
    }
    const Scalar d = wedge_det(cols);
    auto swapped = cols;
    const auto i = static_cast<std::size_t>(rng.uniform(0, n - 1));
    const auto j = static_cast<std::size_t>((i + 1 + rng.uniform(0, n - 2)) % n);
    std::swap(swapped[i], swapped[j]);
    EXPECT_EQ(wedge_det(swapped), -d);
    auto dependent = cols;
    dependent[j] = dependent[i];
    EXPECT_TRUE(wedge_det(dependent).is_zero());
  }
}

TEST(DeterminantTest, FloatBackendPartialPivoting) {
  Matrix m(3, 3, Backend::floating);
  const double entries[3][3] = {{0, 2, 1}, {1, 1, 0}, {3, 0, 1}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m(i, j) = Scalar::floating(entries[i][j]);
  }
  // 0(1) - 2(1) + 1(-3) = -5
  EXPECT_NEAR(determinant(m).to_double(), -5.0, 1e-14);
}

TEST(FlagTest, RejectsDependentBasis) {
  EXPECT_THROW(Flag({vec({1, 0}), vec({2, 0})}), DomainError);
  EXPECT_THROW(Flag({vec({1, 0}), vec({0, 1, 0})}), DomainError);
}

TEST(GenericityTest, VeroneseTripleIsGeneric) {
  const std::vector<Flag> flags{veronese_inf(3), veronese(q(1), 3), veronese(q(0), 3)};
  EXPECT_TRUE(is_generic(flags));
}

TEST(GenericityTest, RepeatedFlagIsNotGeneric) {
  testing::Rng rng(1);
  for (int n = 2; n <= 5; ++n) {
    const Flag f = rng.flag(n);
    EXPECT_FALSE(is_generic(std::vector<Flag>{f, f}));
    EXPECT_TRUE(is_generic(std::vector<Flag>{f}));
  }
}

TEST(GenericityTest, DimensionMismatch) {
  EXPECT_THROW((void)is_generic(std::vector<Flag>{veronese_inf(2), veronese_inf(3)}), DomainError);
}

TEST(TripleRatioTest, StandardTripleIsOne) {
  EXPECT_EQ(triple_ratio_exp(veronese_inf(3), veronese(q(1), 3), veronese(q(0), 3), 1, 1, 1),
            q(1));
}

TEST(TripleRatioTest, DegenerateAndInvalid) {
  const Flag e = veronese_inf(3);
  const Flag g = veronese(q(0), 3);
  try {
    (void)triple_ratio_exp(e, e, g, 1, 1, 1);
    FAIL() << "expected DegenerateFlagsError";
  } catch (const DegenerateFlagsError& err) {
    EXPECT_NE(std::string(err.what()).find("degenerate flags"), std::string::npos);
  }
  EXPECT_THROW((void)triple_ratio_exp(e, veronese(q(1), 3), g, 0, 1, 2), DomainError);
  EXPECT_THROW((void)triple_ratio_exp(e, veronese(q(1), 3), g, 1, 1, 2), DomainError);
}

TEST(DoubleRatioTest, SampleQuadruples) {
  // h_CA quadruple at alpha=2, beta=1, gamma=1/2.
  EXPECT_EQ(double_ratio_exp(veronese(q(1), 2), veronese_inf(2), veronese(q(3), 2),
                             veronese(q(0), 2), 1),
            q(2));
  // h_AB quadruple.
  EXPECT_EQ(double_ratio_exp(veronese_inf(2), veronese(q(0), 2), veronese(q(-1, 2), 2),
                             veronese(q(1), 2), 1),
            q(2));
}

TEST(DoubleRatioTest, SampleWedgeFactors) {
  // Y(1), Y'(1), Y(0), Y'(0) for the h_CA quadruple at n=2.
  const Flag e = veronese(q(1), 2);
  const Flag f = veronese_inf(2);
  const Flag g = veronese(q(3), 2);
  const Flag g2 = veronese(q(0), 2);
  EXPECT_EQ(wedge_det(std::vector<VecN>{e[0], g[0]}), q(-2));
  EXPECT_EQ(wedge_det(std::vector<VecN>{e[0], g2[0]}), q(1));
  EXPECT_EQ(wedge_det(std::vector<VecN>{f[0], g[0]}), q(1));
  EXPECT_EQ(wedge_det(std::vector<VecN>{f[0], g2[0]}), q(1));
}

TEST(DoubleRatioTest, IndexRange) {
  const Flag f = veronese_inf(3);
  try {
    (void)double_ratio_exp(f, veronese(q(0), 3), veronese(q(1), 3), veronese(q(2), 3), 0);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("p out of range"), std::string::npos);
  }
  EXPECT_THROW(
      (void)double_ratio_exp(f, veronese(q(0), 3), veronese(q(1), 3), veronese(q(2), 3), 3),
      DomainError);
}

class FlagPropertyTest : public ::testing::Test {
 protected:
  testing::Rng rng_{2024};

  // Retries until the random triple is generic.
  std::array<Flag, 3> generic_triple(int n) {
    for (;;) {
      std::array<Flag, 3> t{rng_.flag(n), rng_.flag(n), rng_.flag(n)};
      if (is_generic(std::vector<Flag>{t[0], t[1], t[2]})) return t;
    }
  }
};

TEST_F(FlagPropertyTest, TripleRatioSymmetries) {
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(rng_.uniform(3, 6));
    const auto [e, f, g] = generic_triple(n);
    for (int p = 1; p <= n - 2; ++p) {
      for (int qq = 1; p + qq <= n - 1; ++qq) {
        const int r = n - p - qq;
        const Scalar t = triple_ratio_exp(e, f, g, p, qq, r);
        EXPECT_EQ(t, triple_ratio_exp(f, g, e, qq, r, p));
        EXPECT_EQ(t * triple_ratio_exp(f, e, g, qq, p, r), q(1));
      }
    }
  }
}

TEST_F(FlagPropertyTest, ScalingInvariance) {
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(rng_.uniform(3, 5));
    auto [e, f, g] = generic_triple(n);
    const Flag g2 = rng_.flag(n);
    const auto i = static_cast<std::size_t>(rng_.uniform(0, n - 1));
    Scalar factor = rng_.rational(-5, 5, 4);
    if (factor.is_zero()) factor = q(7, 3);
    for (int p = 1; p <= n - 2; ++p) {
      const int r = n - p - 1;
      const Scalar before = triple_ratio_exp(e, f, g, p, 1, r);
      EXPECT_EQ(before, triple_ratio_exp(e.rescaled(i, factor), f, g, p, 1, r));
      EXPECT_EQ(before, triple_ratio_exp(e, f.rescaled(i, factor), g.rescaled(i, factor), p, 1, r));
    }
    if (!is_generic(std::vector<Flag>{e, f, g, g2})) continue;
    for (int p = 1; p <= n - 1; ++p) {
      const Scalar before = double_ratio_exp(e, f, g, g2, p);
      EXPECT_EQ(before, double_ratio_exp(e.rescaled(i, factor), f, g, g2, p));
      EXPECT_EQ(before, double_ratio_exp(e, f, g.rescaled(0, factor), g2.rescaled(0, factor), p));
    }
  }
}

TEST_F(FlagPropertyTest, ProjectiveInvariance) {
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(rng_.uniform(3, 5));
    const auto [e, f, g] = generic_triple(n);
    const Matrix m = rng_.invertible(n);
    for (const auto& idx : std::vector<std::array<int, 3>>{{1, 1, n - 2}, {n - 2, 1, 1}}) {
      EXPECT_EQ(triple_ratio_exp(e, f, g, idx[0], idx[1], idx[2]),
                triple_ratio_exp(e.transformed(m), f.transformed(m), g.transformed(m), idx[0],
                                 idx[1], idx[2]));
    }
  }
}

TEST(SameFlagTest, DetectsSubspaceEquality) {
  const Flag a = veronese(q(2), 3);
  // Same subspaces, different basis: replace v2 by v2 + v1 and rescale v3.
  std::vector<VecN> basis = a.basis();
  for (std::size_t k = 0; k < 3; ++k) basis[1][k] += basis[0][k];
  for (auto& x : basis[2]) x *= q(-5);
  EXPECT_TRUE(same_flag(a, Flag(basis)));
  EXPECT_FALSE(same_flag(a, veronese(q(3), 3)));
}

}  // namespace
}  // namespace pantsbd
