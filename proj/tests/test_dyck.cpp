#include <dyckgrass/dyck.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace dyckgrass;

namespace {

const DyckStrip kLow{{1, 2}, {2, 1}, {3, 2}};

}  // namespace

TEST(Strip, Recognition) {
  EXPECT_TRUE(is_dyck_strip(kLow));
  EXPECT_TRUE(is_dyck_strip({{2, 3}}));
  EXPECT_FALSE(is_dyck_strip({}));
  EXPECT_FALSE(is_dyck_strip({{1, 2}, {3, 2}}));
  EXPECT_FALSE(is_dyck_strip({{1, 2}, {2, 3}}));
  EXPECT_FALSE(is_dyck_strip({{1, 2}, {2, 1}}));
  EXPECT_FALSE(is_dyck_strip({{1, 2}, {2, 1}, {3, 4}}));
  EXPECT_EQ(strip_height(kLow), 2);
  EXPECT_EQ(strip_length(kLow), 3);
}

TEST(Strip, AddRemove) {
  Path id = identity_path(4, 2);
  EXPECT_TRUE(strip_addable(id, kLow));
  EXPECT_EQ(add_strip(id, kLow).steps, "UDUD");
  EXPECT_FALSE(strip_addable(id, {{2, 3}}));
  EXPECT_THROW(add_strip(id, {{2, 3}}), std::invalid_argument);

  auto rem = removable_strips(Path(4, 2, "UDUD"));
  ASSERT_EQ(rem.size(), 3u);
  EXPECT_TRUE(std::count(rem.begin(), rem.end(), DyckStrip{{1, 2}}));
  EXPECT_TRUE(std::count(rem.begin(), rem.end(), DyckStrip{{3, 2}}));
  EXPECT_TRUE(std::count(rem.begin(), rem.end(), kLow));
  EXPECT_EQ(remove_strip(Path(4, 2, "UDUD"), kLow).steps, "DDUU");
  EXPECT_EQ(remove_strip(Path(4, 2, "UDUD"), {{1, 2}}).steps, "DUUD");

  auto remtop = removable_strips(top_path(4, 2));
  ASSERT_EQ(remtop.size(), 1u);
  EXPECT_EQ(remtop[0], (DyckStrip{{2, 3}}));
}

TEST(Strip, RemovalRoundTrip) {
  for (const Path& p : enumerate_paths(6, 3))
    for (const DyckStrip& d : removable_strips(p)) {
      Path down = remove_strip(p, d);
      EXPECT_TRUE(strip_addable(down, d));
      EXPECT_EQ(add_strip(down, d), p);
    }
}

TEST(Partitions, Enumeration) {
  Path id = identity_path(4, 2);
  auto p1 = enumerate_partitions(id, Path(4, 2, "UDUD"));
  EXPECT_EQ(p1.size(), 2u);
  auto p2 = enumerate_partitions(id, top_path(4, 2));
  EXPECT_EQ(p2.size(), 2u);
  for (const DyckPartition& p : p2) {
    size_t boxes = 0;
    for (const DyckStrip& d : p) boxes += d.size();
    EXPECT_EQ(boxes, 4u);
  }
  EXPECT_EQ(enumerate_partitions(id, id).size(), 1u);
  EXPECT_TRUE(enumerate_partitions(id, id).front().empty());
}

TEST(Partitions, TypeClassification) {
  Path id = identity_path(4, 2);
  auto diamond = enumerate_partitions(id, top_path(4, 2));
  int t1 = 0, t2 = 0;
  for (const DyckPartition& p : diamond) {
    if (is_type1(p)) {
      ++t1;
      EXPECT_EQ(p.size(), 4u);
    }
    if (is_type2(p)) {
      ++t2;
      EXPECT_EQ(p.size(), 2u);
    }
  }
  EXPECT_EQ(t1, 1);
  EXPECT_EQ(t2, 1);
}

TEST(Partitions, CountingPolynomials) {
  Path id = identity_path(4, 2);
  EXPECT_EQ(q1(id, Path(4, 2, "UDUD")), Laurent::v(3) + Laurent::v(1));
  EXPECT_EQ(q1(id, top_path(4, 2)), Laurent::v(4));
  EXPECT_EQ(q2(id, top_path(4, 2)), Laurent::v(2));
  EXPECT_EQ(q2(id, Path(4, 2, "UDUD")), Laurent::v(1));
  EXPECT_EQ(q2(Path(4, 2, "DUDU"), Path(4, 2, "UDUD")), Laurent::v(2));
  EXPECT_EQ(q1(id, id), Laurent(1));
  EXPECT_EQ(q2(id, id), Laurent(1));
  EXPECT_TRUE(q1(Path(4, 2, "DUUD"), Path(4, 2, "UDDU")).is_zero());
  EXPECT_TRUE(q2(top_path(4, 2), id).is_zero());
}

TEST(Partitions, AdmissibleOrders) {
  Path id = identity_path(4, 2);
  auto diamond = enumerate_partitions(id, top_path(4, 2));
  for (const DyckPartition& p : diamond) {
    auto orders = admissible_orders(p, id);
    if (p.size() == 4) {
      ASSERT_EQ(orders.size(), 2u);
      for (const auto& o : orders) {
        EXPECT_EQ(p[o.front()], (DyckStrip{{2, 1}}));
        EXPECT_EQ(p[o.back()], (DyckStrip{{2, 3}}));
        StripOrdering so{p, o};
        EXPECT_TRUE(is_admissible(so, id));
      }
    } else {
      ASSERT_EQ(orders.size(), 1u);
      EXPECT_EQ(p[orders[0][0]], kLow);
    }
  }
  StripOrdering bad{diamond.front(), {}};
  EXPECT_FALSE(is_admissible(bad, id));
}

TEST(Partitions, HeightSort) {
  Path id = identity_path(4, 2);
  for (const DyckPartition& p : enumerate_partitions(id, top_path(4, 2))) {
    if (!is_type1(p)) continue;
    StripOrdering o{p, {}};
    for (int k = 0; k < partition_size(p); ++k) o.order.push_back(k);
    StripOrdering sorted = height_sort(o);
    EXPECT_TRUE(is_admissible(sorted, id));
    for (size_t k = 1; k < sorted.order.size(); ++k)
      EXPECT_LE(strip_height(p[sorted.order[k - 1]]), strip_height(p[sorted.order[k]]));
  }
}

TEST(Partitions, SuccessorOrder) {
  Path id = identity_path(4, 2);
  auto diamond = enumerate_partitions(id, top_path(4, 2));
  ASSERT_EQ(diamond.size(), 2u);
  const DyckPartition& a = diamond[0].size() == 4 ? diamond[0] : diamond[1];
  const DyckPartition& b = diamond[0].size() == 4 ? diamond[1] : diamond[0];
  EXPECT_TRUE(partition_succ(a, b));
  EXPECT_FALSE(partition_succ(b, a));
  EXPECT_FALSE(partition_succ(a, a));
}

TEST(Strip, OverlyingRewrite) {
  DyckStrip big{{1, 3}, {2, 2}, {3, 1}, {4, 2}, {5, 3}};
  DyckStrip top{{3, 3}};
  auto [cp, dp] = overlying_rewrite(big, top);
  EXPECT_EQ(cp, (DyckStrip{{3, 1}}));
  EXPECT_EQ(dp, (DyckStrip{{1, 3}, {2, 2}, {3, 3}, {4, 2}, {5, 3}}));
  EXPECT_TRUE(is_dyck_strip(cp));
  EXPECT_TRUE(is_dyck_strip(dp));
  EXPECT_THROW(overlying_rewrite({{2, 1}}, {{2, 3}}), std::domain_error);
  EXPECT_THROW(overlying_rewrite({{1, 2}}, {{3, 2}}), std::invalid_argument);
}

TEST(Strip, Distant) {
  EXPECT_TRUE(strips_distant({{1, 2}}, {{3, 2}}));
  EXPECT_FALSE(strips_distant({{2, 1}}, {{2, 3}}));
  EXPECT_FALSE(strips_distant(kLow, {{2, 3}}));
  EXPECT_THROW(strips_distant(kLow, kLow), std::invalid_argument);
}

TEST(Partitions, CountsStayConsistent) {
  Grassmannian ctx(5, 2);
  for (size_t a = 0; a < ctx.size(); ++a)
    for (size_t b = 0; b < ctx.size(); ++b) {
      DyckCounts c = dyck_counts(ctx.paths[a], ctx.paths[b]);
      if (!ctx.leq(a, b)) {
        EXPECT_TRUE(c.q1.is_zero());
        EXPECT_TRUE(c.q2.is_zero());
        continue;
      }
      EXPECT_LE(c.type2_count, 1);
      if (a == b) {
        EXPECT_EQ(c.q1, Laurent(1));
        EXPECT_EQ(c.q2, Laurent(1));
      }
    }
}
