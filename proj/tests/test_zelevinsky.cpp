#include <dyckgrass/verify.hpp>
#include <dyckgrass/zelevinsky.hpp>

#include <gtest/gtest.h>

using namespace dyckgrass;

TEST(Flatten, Examples) {
  Path p(4, 2, "UDUD");
  FlattenInfo f1 = flatten_info(p, 1);
  EXPECT_EQ(f1.result.steps, "DUUD");
  EXPECT_EQ(f1.a, 0);
  EXPECT_EQ(f1.b, 3);
  FlattenInfo f3 = flatten_info(p, 3);
  EXPECT_EQ(f3.result.steps, "UDDU");
  EXPECT_EQ(f3.a, 2);
  EXPECT_EQ(f3.b, 5);
  EXPECT_EQ(flatten_peak(top_path(4, 2), 2).steps, "DDUU");
  EXPECT_THROW(flatten_info(p, 2), std::invalid_argument);
}

TEST(Flatten, RemovesPeak) {
  for (const Path& p : enumerate_paths(5, 2))
    for (int pk : peaks(p)) {
      Path q = flatten_peak(p, pk);
      auto before = peaks(p), after = peaks(q);
      EXPECT_EQ(after.size() + 1, before.size());
      for (int r : after) EXPECT_TRUE(std::count(before.begin(), before.end(), r));
      EXPECT_FALSE(std::count(after.begin(), after.end(), pk));
    }
}

TEST(Neat, Choices) {
  EXPECT_EQ(neat_choices(Path(4, 2, "UDUD")), (std::vector<int>{1, 3}));
  EXPECT_EQ(neat_choices(top_path(4, 2)), (std::vector<int>{2}));
  EXPECT_TRUE(neat_choices(identity_path(4, 2)).empty());
}

TEST(Neat, Orders) {
  auto orders = neat_orders(Path(4, 2, "UDUD"));
  EXPECT_EQ(orders, (std::vector<std::vector<int>>{{1, 3}, {3, 1}}));
  EXPECT_TRUE(is_neat(Path(4, 2, "UDUD"), {1, 3}));
  EXPECT_FALSE(is_neat(Path(4, 2, "UDUD"), {1}));
  EXPECT_EQ(neat_orders(identity_path(4, 2)),
            (std::vector<std::vector<int>>{{}}));
}

TEST(Pairs, Frozen) {
  Path lam(4, 2, "UDUD");
  TranslationPair t13 = translation_pair(lam, {1, 3});
  EXPECT_EQ(t13.Ivec,
            (std::vector<std::set<int>>{{}, {3}, {3}, {1, 3}}));
  EXPECT_EQ(t13.Jvec, (std::vector<std::set<int>>{{1, 3}, {2, 3}, {1, 3}}));
  EXPECT_EQ(t13.shift, 3);
  TranslationPair t31 = translation_pair(lam, {3, 1});
  EXPECT_EQ(t31.Ivec,
            (std::vector<std::set<int>>{{}, {1}, {1}, {1, 3}}));
  EXPECT_EQ(t31.Jvec, (std::vector<std::set<int>>{{1, 3}, {1, 2}, {1, 3}}));
  EXPECT_EQ(t31.shift, 3);
  EXPECT_NO_THROW(validate_pair(t13));
  EXPECT_NO_THROW(validate_pair(t31));
}

TEST(Pairs, BaseCase) {
  TranslationPair base = translation_pair(identity_path(4, 2), {});
  EXPECT_EQ(base.Ivec, (std::vector<std::set<int>>{{}, {1, 3}}));
  EXPECT_EQ(base.Jvec, (std::vector<std::set<int>>{{1, 3}}));
  EXPECT_EQ(base.shift, 0);
  EXPECT_TRUE(end_point(base).is_identity());
  EXPECT_TRUE(is_reduced(base));
}

TEST(Pairs, EndpointAndLength) {
  Path lam(4, 2, "UDUD");
  for (const auto& o : neat_orders(lam)) {
    TranslationPair tp = translation_pair(lam, o);
    EXPECT_EQ(end_point(tp), perm_of_path(lam));
    EXPECT_TRUE(is_reduced(tp));
    EXPECT_EQ(pair_length(tp), length(lam));
  }
}

TEST(Pairs, ScrambledNotReduced) {
  TranslationPair tp = translation_pair(Path(4, 2, "UDUD"), {1, 3});
  tp.Jvec[1] = {1, 3};
  EXPECT_FALSE(is_reduced(tp));
}

TEST(Characters, MatchKLElement) {
  Grassmannian ctx(4, 2);
  auto h = parabolic_h_table(ctx);
  std::set<int> I = grassmannian_parabolic(4, 2);
  Path lam(4, 2, "UDUD");
  HeckeElt ref = kl_lift(ctx, h, static_cast<int>(ctx.idx(lam)), I);
  HeckeElt c13 = bs_character(translation_pair(lam, {1, 3}));
  HeckeElt c31 = bs_character(translation_pair(lam, {3, 1}));
  EXPECT_EQ(c13, ref);
  EXPECT_EQ(c31, ref);
}

TEST(Characters, BadPairRejected) {
  TranslationPair tp = translation_pair(Path(4, 2, "UDUD"), {1, 3});
  tp.Ivec[0] = {2};
  EXPECT_THROW(bs_character(tp), std::invalid_argument);
}

TEST(Characters, SweepSmall) {
  SmallResolutionReport r4 = verify_small_resolution(4, 2);
  EXPECT_TRUE(r4.ok());
  EXPECT_EQ(r4.paths, 6);
  EXPECT_EQ(r4.orders, 7);
  EXPECT_TRUE(verify_small_resolution(5, 2).ok());
  EXPECT_TRUE(verify_small_resolution(4, 1).ok());
}
