#include <dyckgrass/path.hpp>

#include <gtest/gtest.h>

#include <cstdlib>

using namespace dyckgrass;

TEST(Path, Validation) {
  EXPECT_NO_THROW(Path(4, 2, "UDUD"));
  EXPECT_THROW(Path(4, 2, "UUUD"), std::invalid_argument);
  EXPECT_THROW(Path(4, 2, "UDU"), std::invalid_argument);
  EXPECT_THROW(Path(4, 2, "UXUD"), std::invalid_argument);
  EXPECT_EQ(identity_path(4, 2).steps, "DDUU");
  EXPECT_EQ(top_path(4, 2).steps, "UUDD");
}

TEST(Path, Heights) {
  Path p(4, 2, "UDUD");
  EXPECT_EQ(heights(p), (std::vector<int>{2, 3, 2, 3, 2}));
  EXPECT_EQ(height(p, 0), 2);
  EXPECT_EQ(height(p, 1), 3);
  EXPECT_EQ(heights(identity_path(4, 2)), (std::vector<int>{2, 1, 0, 1, 2}));
}

TEST(Path, Length) {
  EXPECT_EQ(length(Path(4, 2, "DDUU")), 0);
  EXPECT_EQ(length(Path(4, 2, "DUDU")), 1);
  EXPECT_EQ(length(Path(4, 2, "UDUD")), 3);
  EXPECT_EQ(length(Path(4, 2, "UUDD")), 4);
}

TEST(Path, BruhatOrder) {
  Path id = identity_path(4, 2), tp = top_path(4, 2);
  Path a(4, 2, "DUUD"), b(4, 2, "UDDU");
  EXPECT_TRUE(bruhat_leq(id, a));
  EXPECT_TRUE(bruhat_leq(a, tp));
  EXPECT_FALSE(bruhat_leq(a, b));
  EXPECT_FALSE(bruhat_leq(b, a));
}

TEST(Path, StepClassification) {
  Path p(4, 2, "UDUD");
  EXPECT_EQ(peaks(p), (std::vector<int>{1, 3}));
  EXPECT_EQ(valleys(p), (std::vector<int>{2}));
  EXPECT_EQ(descent_set(p), (std::set<int>{1, 3}));
  EXPECT_EQ(descent_set(identity_path(4, 2)), (std::set<int>{1, 3}));
  EXPECT_EQ(descent_set(top_path(4, 2)), (std::set<int>{1, 2, 3}));
  EXPECT_TRUE(valleys(top_path(4, 2)).empty());
}

TEST(Path, FlipSteps) {
  EXPECT_EQ(flip_steps(Path(4, 2, "UDUD"), 2).steps, "UUDD");
  EXPECT_EQ(flip_steps(Path(4, 2, "UDUD"), 1).steps, "DUUD");
}

TEST(Path, Region) {
  Region r = region_boxes(identity_path(4, 2), Path(4, 2, "UDUD"));
  EXPECT_EQ(r.boxes, (std::vector<Box>{{1, 2}, {2, 1}, {3, 2}}));
  Region d = region_boxes(identity_path(4, 2), top_path(4, 2));
  EXPECT_EQ(d.boxes, (std::vector<Box>{{1, 2}, {2, 1}, {2, 3}, {3, 2}}));
  EXPECT_TRUE(region_boxes(Path(4, 2, "UDUD"), Path(4, 2, "UDUD")).boxes.empty());
  EXPECT_THROW(region_boxes(Path(4, 2, "UDUD"), identity_path(4, 2)), std::invalid_argument);
}

TEST(Path, ReducedWordAndPerm) {
  Path p(4, 2, "UDUD");
  EXPECT_EQ(reduced_word(p), (std::vector<int>{1, 3, 2}));
  EXPECT_EQ(perm_of_path(p).one_line(), (std::vector<int>{2, 4, 1, 3}));
  EXPECT_TRUE(perm_of_path(identity_path(4, 2)).is_identity());
  for (const Path& q : enumerate_paths(5, 2)) {
    Perm w = perm_of_path(q);
    EXPECT_TRUE(in_minimal_coset_reps(w, 2));
    EXPECT_EQ(w.length(), length(q));
    EXPECT_EQ(path_of_perm(w, 5, 2), q);
  }
  EXPECT_THROW(path_of_perm(Perm::from_word(4, {2, 1}), 4, 2), std::domain_error);
}

TEST(Path, StepDirectionRule) {
  for (const Path& q : enumerate_paths(5, 3)) {
    Perm winv = perm_of_path(q).inverse();
    for (int k = 1; k <= 5; ++k)
      EXPECT_EQ(q.steps[k - 1] == 'D', winv(k) <= 3);
  }
}

TEST(Path, HeightFormula) {
  for (const Path& q : enumerate_paths(6, 2)) {
    auto rex = rex_counts(q);
    auto h = heights(q);
    for (int j = 0; j <= 6; ++j) EXPECT_EQ(h[j], 2 * rex[j] + std::abs(2 - j));
  }
}

TEST(Path, YoungShape) {
  EXPECT_EQ(young_shape(Path(4, 2, "UUDD")), (std::vector<int>{2, 2}));
  EXPECT_EQ(young_shape(Path(4, 2, "UDUD")), (std::vector<int>{2, 1}));
  EXPECT_TRUE(young_shape(identity_path(4, 2)).empty());
  EXPECT_EQ(conjugate_shape({2, 1}), (std::vector<int>{2, 1}));
  EXPECT_EQ(conjugate_shape({2, 2}), (std::vector<int>{2, 2}));
  EXPECT_EQ(conjugate_shape({3, 1}), (std::vector<int>{2, 1, 1}));
}

TEST(Path, Enumeration) {
  auto all = enumerate_paths(4, 2);
  ASSERT_EQ(all.size(), 6u);
  EXPECT_EQ(all[0].steps, "DDUU");
  EXPECT_EQ(all[1].steps, "DUDU");
  EXPECT_EQ(all[2].steps, "DUUD");
  EXPECT_EQ(all[3].steps, "UDDU");
  EXPECT_EQ(all[4].steps, "UDUD");
  EXPECT_EQ(all[5].steps, "UUDD");
  EXPECT_EQ(enumerate_paths(8, 4).size(), 70u);
}

TEST(Path, GrassmannianContext) {
  Grassmannian ctx(4, 2);
  EXPECT_EQ(ctx.size(), 6u);
  EXPECT_EQ(ctx.id_idx(), 0);
  EXPECT_EQ(ctx.idx(Path(4, 2, "UDUD")), 4);
  EXPECT_TRUE(ctx.leq(0, 5));
  EXPECT_FALSE(ctx.leq(2, 3));
  EXPECT_EQ(ctx.len[4], 3);
}

TEST(Path, ParabolicGenerators) {
  EXPECT_EQ(grassmannian_parabolic(4, 2), (std::set<int>{1, 3}));
  EXPECT_EQ(grassmannian_parabolic(6, 1), (std::set<int>{2, 3, 4, 5}));
}
