#include <dyckgrass/equivariant.hpp>
#include <dyckgrass/verify.hpp>

#include <gtest/gtest.h>

using namespace dyckgrass;

namespace {
MPoly x(int n, int j) { return MPoly::variable(n, j); }
MPoly weight42() { return x(4, 1) + x(4, 2); }
}  // namespace

TEST(SchubertAction, SingleBoxStep) {
  Path id = identity_path(4, 2);
  Path top = top_path(4, 2);
  SchubertModuleElement acted = schubert_act(weight42(), schubert_basis(top, id));
  ASSERT_EQ(acted.coeffs.size(), 2u);
  EXPECT_EQ(acted.coeffs.at(id), weight42());
  EXPECT_EQ(acted.coeffs.at(Path(4, 2, "DUDU")), MPoly::constant(4, 1));
}

TEST(SchubertAction, TopIsDiagonal) {
  Path top = top_path(4, 2);
  SchubertModuleElement acted = schubert_act(weight42(), schubert_basis(top, top));
  ASSERT_EQ(acted.coeffs.size(), 1u);
  EXPECT_EQ(acted.coeffs.at(top), x(4, 3) + x(4, 4));
}

TEST(SchubertAction, AmbientTruncates) {
  Path mu(4, 2, "UDDU");
  SchubertModuleElement acted = schubert_act(weight42(), schubert_basis(mu, mu));
  ASSERT_EQ(acted.coeffs.size(), 1u);
  EXPECT_EQ(acted.coeffs.at(mu), x(4, 2) + x(4, 3));
}

TEST(SchubertAction, WeightValidation) {
  Path top = top_path(4, 2);
  SchubertModuleElement e = schubert_basis(top, top);
  EXPECT_THROW(schubert_act(x(4, 1), e), std::domain_error);
  EXPECT_THROW(schubert_act(weight42().pow(2), e), std::domain_error);
  EXPECT_THROW(schubert_act(MPoly(5), e), std::domain_error);
  SchubertModuleElement z = schubert_act(MPoly(4), e);
  EXPECT_TRUE(z.coeffs.empty());
  EXPECT_THROW(schubert_basis(identity_path(4, 2), top), std::invalid_argument);
}

TEST(PeeledAction, SingleStripsOnly) {
  Path mu(4, 2, "UDUD");
  FModuleElement acted = f_act(weight42(), f_basis(mu));
  ASSERT_EQ(acted.coeffs.size(), 3u);
  EXPECT_EQ(acted.coeffs.at(FIdx{mu, {}}), x(4, 2) + x(4, 4));
  FIdx left{Path(4, 2, "DUUD"), {{Box{1, 2}}}};
  FIdx right{Path(4, 2, "UDDU"), {{Box{3, 2}}}};
  EXPECT_EQ(acted.coeffs.at(left), MPoly::constant(4, 1));
  EXPECT_EQ(acted.coeffs.at(right), MPoly::constant(4, 1));
  for (const auto& [idx, f] : acted.coeffs) EXPECT_FALSE(is_formal_index(idx));
}

TEST(PeeledAction, PartitionAccumulates) {
  Path mu(4, 2, "UDUD");
  FModuleElement twice = f_act(weight42(), f_act(weight42(), f_basis(mu)));
  FIdx both{Path(4, 2, "DUDU"), {{Box{1, 2}}, {Box{3, 2}}}};
  ASSERT_TRUE(twice.coeffs.count(both));
  EXPECT_EQ(twice.coeffs.at(both), MPoly::constant(4, 2));
}

TEST(Localization, ClassValues) {
  Grassmannian ctx(2, 1);
  Path lo(2, 1, "DU"), hi(2, 1, "UD");
  GKMClass unitc = gkm_schubert(ctx, lo, hi);
  ASSERT_EQ(unitc.values.size(), 2u);
  EXPECT_EQ(unitc.values.at(lo), MPoly::constant(2, 1));
  EXPECT_EQ(unitc.values.at(hi), MPoly::constant(2, 1));
  GKMClass point = gkm_schubert(ctx, hi, hi);
  EXPECT_TRUE(point.values.at(lo).is_zero());
  EXPECT_EQ(point.values.at(hi), x(2, 2) - x(2, 1));
  EXPECT_THROW(gkm_schubert(ctx, hi, lo), std::invalid_argument);
}

TEST(Localization, UpperSetSupport) {
  Grassmannian ctx(4, 2);
  Path lam(4, 2, "UDUD");
  GKMClass cls = gkm_schubert(ctx, lam, top_path(4, 2));
  for (const auto& [w, f] : cls.values)
    EXPECT_EQ(!f.is_zero(), bruhat_leq(lam, w)) << w.steps;
}

TEST(PieriChecks, LocalizationAgrees) {
  EXPECT_TRUE(verify_pieri(2, 1).ok());
  EXPECT_TRUE(verify_pieri(3, 1).ok());
  EXPECT_TRUE(verify_pieri(4, 2).ok());
}

TEST(PieriChecks, ActionsCommute) {
  SweepReport rep = verify_commutativity(4, 2, 10, 0);
  EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
  EXPECT_TRUE(verify_commutativity(3, 1, 5, 1).ok());
}
