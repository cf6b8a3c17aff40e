#include <dyckgrass/laurent.hpp>

#include <gtest/gtest.h>

using dyckgrass::Laurent;

TEST(Laurent, Construction) {
  Laurent zero;
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(Laurent(1).coeff(0), 1);
  EXPECT_EQ(Laurent::v(3).coeff(3), 1);
  EXPECT_EQ(Laurent::v(-2).coeff(-2), 1);
  EXPECT_EQ(Laurent::monomial(5, 7).coeff(7), 5);
  EXPECT_TRUE(Laurent::monomial(0, 7).is_zero());
}

TEST(Laurent, Arithmetic) {
  Laurent a = Laurent::v(2) + Laurent(1);
  Laurent b = Laurent::v(2) - Laurent(1);
  EXPECT_EQ(a * b, Laurent::v(4) - Laurent(1));
  EXPECT_EQ(a + b, Laurent::monomial(2, 2));
  EXPECT_TRUE((a - a).is_zero());
  Laurent bal = Laurent::v(1) + Laurent::v(-1);
  EXPECT_EQ(bal * bal, Laurent::v(2) + Laurent::monomial(2, 0) + Laurent::v(-2));
}

TEST(Laurent, Exponents) {
  Laurent f = Laurent::v(3) + Laurent::v(-1);
  EXPECT_EQ(f.min_exp(), -1);
  EXPECT_EQ(f.max_exp(), 3);
  EXPECT_THROW(Laurent().min_exp(), std::domain_error);
  EXPECT_THROW(Laurent().max_exp(), std::domain_error);
  EXPECT_EQ(f.times_monomial(1, 2).min_exp(), 1);
}

TEST(Laurent, DivideExact) {
  Laurent num = (Laurent::v(1) + Laurent::v(-1)) * (Laurent::v(2) + Laurent(3));
  auto q = num.divide_exact(Laurent::v(1) + Laurent::v(-1));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, Laurent::v(2) + Laurent(3));
  EXPECT_FALSE(Laurent(1).divide_exact(Laurent::v(1) + Laurent::v(-1)).has_value());
  EXPECT_FALSE((Laurent::v(1) + Laurent(1)).divide_exact(Laurent::v(1) + Laurent::v(-1))
                   .has_value());
}

TEST(Laurent, NormalForm) {
  EXPECT_EQ(Laurent().str(), "0");
  EXPECT_EQ(Laurent(1).str(), "1");
  EXPECT_EQ(Laurent::v(-2).str(), "v^-2");
  EXPECT_EQ((-Laurent::v(2)).str(), "-v^2");
  Laurent f = Laurent::v(4) + Laurent::monomial(2, 2) + Laurent(1);
  EXPECT_EQ(f.str(), "v^4+2v^2+1");
  Laurent g = Laurent::v(3) + Laurent::monomial(2, 1) + Laurent::monomial(2, -1) + Laurent::v(-3);
  EXPECT_EQ(g.str(), "v^3+2v+2v^-1+v^-3");
}
