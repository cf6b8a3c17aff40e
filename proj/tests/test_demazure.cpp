#include <dyckgrass/demazure.hpp>
#include <dyckgrass/verify.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace dyckgrass;

namespace {
MPoly x(int n, int j) { return MPoly::variable(n, j); }
}  // namespace

TEST(MPolyOps, Grading) {
  MPoly f = x(3, 1) * x(3, 2);
  EXPECT_EQ(f.degree(), 4);
  EXPECT_TRUE(f.is_homogeneous());
  EXPECT_FALSE((f + x(3, 1)).is_homogeneous());
  EXPECT_EQ(MPoly(3).degree(), -1);
  EXPECT_TRUE(MPoly(3).is_homogeneous());
  EXPECT_THROW(f.value(), std::domain_error);
  EXPECT_EQ(MPoly::constant(3, Rat(7, 2)).value(), Rat(7, 2));
}

TEST(MPolyOps, PermAction) {
  MPoly f = x(3, 1).pow(2) + x(3, 2).scaled(3);
  Perm a = Perm::from_word(3, {1});
  Perm b = Perm::from_word(3, {2});
  EXPECT_EQ(f.apply_perm(a).apply_perm(b), f.apply_perm(b * a));
  EXPECT_EQ(x(3, 1).apply_perm(a), x(3, 2));
  MPoly sym = x(3, 1) + x(3, 2) + x(3, 3);
  EXPECT_EQ(sym.apply_perm(Perm::from_word(3, {1, 2})), sym);
}

TEST(MPolyOps, EqualSubstitution) {
  MPoly root = x(3, 1) - x(3, 3);
  MPoly f = root * (x(3, 2) + x(3, 3));
  EXPECT_TRUE(f.substitute_equal(1, 3).is_zero());
  EXPECT_FALSE(f.substitute_equal(1, 2).is_zero());
  EXPECT_EQ(x(3, 1).substitute_equal(1, 2), x(3, 2));
}

TEST(Operators, SimpleValues) {
  EXPECT_EQ(demazure(1, x(2, 1)), MPoly::constant(2, 1));
  EXPECT_EQ(demazure(1, x(2, 1).pow(2)), x(2, 1) + x(2, 2));
  EXPECT_EQ(demazure(1, x(2, 2)), -MPoly::constant(2, 1));
  EXPECT_TRUE(demazure(1, x(2, 1) * x(2, 2)).is_zero());
  EXPECT_EQ(reflection_demazure(1, 3, x(3, 1)), MPoly::constant(3, 1));
}

TEST(Operators, WordComposite) {
  MPoly f = x(3, 1) * x(3, 2);
  EXPECT_EQ(demazure_word({1, 2}, f), MPoly::constant(3, 1));
  EXPECT_EQ(demazure_word({}, f), f);
  EXPECT_THROW(demazure_word({1, 1}, f), std::domain_error);
  Perm w0 = Perm::from_word(3, {1, 2, 1});
  EXPECT_EQ(demazure_perm(w0, x(3, 1).pow(2) * x(3, 2)), MPoly::constant(3, 1));
}

TEST(Operators, WordIndependence) {
  EXPECT_TRUE(verify_braid(3).ok());
  EXPECT_TRUE(verify_braid(4).ok());
}

TEST(Operators, ProductExpansion) {
  Perm x231 = Perm::from_word(3, {1, 2});
  ASSERT_EQ(x231.one_line(), (std::vector<int>{2, 3, 1}));
  EXPECT_EQ(reflection_covers(x231).size(), 2u);
  EXPECT_TRUE(reflection_covers(Perm(3)).empty());
  std::mt19937 rng(0);
  EXPECT_TRUE(check_demaformula(x231, 5, rng));
  EXPECT_TRUE(check_demaformula(Perm::from_word(4, {2, 1, 3}), 5, rng));
  EXPECT_TRUE(check_demaformula(Perm::from_word(4, {1, 2, 3}), 5, rng));
}

TEST(Ampleness, DegreeTwoInvariants) {
  MPoly rho = x(4, 1) + x(4, 2);
  EXPECT_TRUE(is_ample(4, 2, rho));
  EXPECT_FALSE(is_ample(4, 2, -rho));
  EXPECT_FALSE(is_ample(4, 2, MPoly(4)));
  EXPECT_THROW(is_ample(4, 2, x(4, 1)), std::domain_error);
  EXPECT_THROW(is_ample(4, 2, rho.pow(2)), std::domain_error);
  EXPECT_THROW(is_ample(4, 2, MPoly(5)), std::invalid_argument);
}

TEST(Ampleness, PositivitySweep) {
  PositivityReport rep = positivity_sweep(4, 2, x(4, 1) + x(4, 2));
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.checked, 6);
  EXPECT_TRUE(positivity_sweep(5, 2, x(5, 1) + x(5, 2)).ok());
}

TEST(Localization, PointRestrictions) {
  Perm e2(2);
  Perm s1 = Perm::simple(2, 1);
  EXPECT_TRUE(billey_restriction(s1, e2).is_zero());
  EXPECT_EQ(billey_restriction(s1, s1), x(2, 1) - x(2, 2));
  EXPECT_EQ(billey_restriction(e2, s1), MPoly::constant(2, 1));
  EXPECT_EQ(billey_restriction(e2, e2), MPoly::constant(2, 1));
  Perm s1_3 = Perm::simple(3, 1);
  Perm s2_3 = Perm::simple(3, 2);
  EXPECT_TRUE(billey_restriction(s1_3, s2_3).is_zero());
  EXPECT_EQ(billey_restriction(s2_3, Perm::from_word(3, {1, 2})),
            x(3, 1) - x(3, 3));
}
