#pragma once

#include "demazure.hpp"
#include "dyck.hpp"
#include "equivariant.hpp"
#include "hecke.hpp"
#include "homology.hpp"
#include "path.hpp"
#include "zelevinsky.hpp"

#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace dyckgrass {

struct SweepReport {
  std::string name;
  long checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void fail(const std::string& what) {
    if (failures.size() < 20) failures.push_back(what);
  }
};

// Counting polynomials against the recursion tables: q1 = h, q2 = g, at most
// one type-2 partition per pair.
inline SweepReport verify_tables_vs_strips(int n, int i) {
  SweepReport rep{"strip counts vs tables", 0, {}};
  Grassmannian ctx(n, i);
  auto h = parabolic_h_table(ctx);
  auto g = inverse_g_table(ctx, h);
  for (size_t a = 0; a < ctx.size(); ++a)
    for (size_t b = 0; b < ctx.size(); ++b) {
      ++rep.checked;
      DyckCounts c = dyck_counts(ctx.paths[a], ctx.paths[b]);
      std::ostringstream tag;
      tag << "(" << n << "," << i << ") " << ctx.paths[a].steps << " / " << ctx.paths[b].steps;
      if (c.q1 != h[a][b]) rep.fail(tag.str() + ": q1 differs from h");
      if (c.q2 != g[a][b]) rep.fail(tag.str() + ": q2 differs from g");
      if (c.type2_count > 1) rep.fail(tag.str() + ": more than one type-2 partition");
    }
  return rep;
}

// Two-sided inversion of the signed g-matrix against h.
inline SweepReport verify_inverse_tables(int n, int i) {
  SweepReport rep{"table inversion", 0, {}};
  Grassmannian ctx(n, i);
  auto h = parabolic_h_table(ctx);
  auto g = inverse_g_table(ctx, h);
  int m = static_cast<int>(ctx.size());
  auto signed_g = [&](int a, int b) {
    int sign = (ctx.len[b] - ctx.len[a]) % 2 == 0 ? 1 : -1;
    return sign == 1 ? g[a][b] : -g[a][b];
  };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      ++rep.checked;
      Laurent gh, hg;
      for (int k = 0; k < m; ++k) {
        gh += signed_g(a, k) * h[k][b];
        hg += h[a][k] * signed_g(k, b);
      }
      Laurent want = a == b ? Laurent(1) : Laurent();
      std::ostringstream tag;
      tag << "(" << n << "," << i << ") " << ctx.paths[a].steps << " / " << ctx.paths[b].steps;
      if (gh != want) rep.fail(tag.str() + ": g.h not the identity");
      if (hg != want) rep.fail(tag.str() + ": h.g not the identity");
    }
  return rep;
}

inline SweepReport verify_euler(int n, int i) {
  SweepReport rep{"euler identity", 0, {}};
  Grassmannian ctx(n, i);
  auto h = parabolic_h_table(ctx);
  auto g = inverse_g_table(ctx, h);
  for (const Path& mu : ctx.paths) {
    ++rep.checked;
    if (!euler_check(ctx, h, g, mu))
      rep.fail("(" + std::to_string(n) + "," + std::to_string(i) + ") " + mu.steps);
  }
  return rep;
}

inline SweepReport verify_hom_dims(int n, int i) {
  SweepReport rep{"hom dimensions", 0, {}};
  Grassmannian ctx(n, i);
  auto h = parabolic_h_table(ctx);
  for (size_t a = 0; a < ctx.size(); ++a)
    for (size_t b = 0; b < ctx.size(); ++b) {
      std::ostringstream tag;
      tag << "(" << n << "," << i << ") " << ctx.paths[a].steps << " / " << ctx.paths[b].steps;
      ++rep.checked;
      if (hom_rank_notless(ctx.paths[a], ctx.paths[b]) != h[a][b])
        rep.fail(tag.str() + ": graded hom rank differs from h");
      if (a != b && ctx.leq(a, b)) {
        Laurent cell = cellular_rank(ctx, ctx.paths[a], ctx.paths[b]);
        Int c2 = cell.coeff(2);
        if (c2 != hom2_dim(ctx, h, ctx.paths[a], ctx.paths[b]))
          rep.fail(tag.str() + ": cellular degree-2 coefficient differs from hom2");
      }
    }
  return rep;
}

// Order-theoretic properties of the partition order and of admissibility on
// every type-1 configuration of the context.
inline SweepReport verify_order_suite(int n, int i) {
  SweepReport rep{"partition order suite", 0, {}};
  Grassmannian ctx(n, i);
  for (size_t a = 0; a < ctx.size(); ++a)
    for (size_t b = 0; b < ctx.size(); ++b) {
      if (!ctx.leq(a, b)) continue;
      const Path& lo = ctx.paths[a];
      const Path& hi = ctx.paths[b];
      std::vector<DyckPartition> conf1;
      int maxh_all = -1;
      bool maxh_same = true;
      for (const DyckPartition& p : enumerate_partitions(lo, hi)) {
        int mh = -1;
        for (const DyckStrip& s : p) mh = std::max(mh, strip_height(s));
        if (maxh_all == -1)
          maxh_all = mh;
        else if (mh != maxh_all)
          maxh_same = false;
        if (is_type1(p)) conf1.push_back(p);
      }
      ++rep.checked;
      std::ostringstream tag;
      tag << "(" << n << "," << i << ") " << lo.steps << " / " << hi.steps;
      if (!maxh_same) rep.fail(tag.str() + ": maximal strip height depends on the partition");
      for (size_t x = 0; x < conf1.size(); ++x) {
        if (partition_succ(conf1[x], conf1[x])) rep.fail(tag.str() + ": order not irreflexive");
        auto orders = admissible_orders(conf1[x], lo);
        if (orders.empty()) rep.fail(tag.str() + ": type-1 partition with no admissible order");
        StripOrdering ho{conf1[x], {}};
        for (int k = 0; k < partition_size(conf1[x]); ++k) ho.order.push_back(k);
        ho = height_sort(ho);
        if (!is_admissible(ho, lo))
          rep.fail(tag.str() + ": height-ascending order not admissible");
        for (size_t y = 0; y < conf1.size(); ++y) {
          if (x < y && partition_succ(conf1[x], conf1[y]) && partition_succ(conf1[y], conf1[x]))
            rep.fail(tag.str() + ": order not antisymmetric");
          for (size_t z = 0; z < conf1.size(); ++z)
            if (partition_succ(conf1[x], conf1[y]) && partition_succ(conf1[y], conf1[z]) &&
                !partition_succ(conf1[x], conf1[z]))
              rep.fail(tag.str() + ": order not transitive");
        }
      }
    }
  return rep;
}

// No equal-size comparable pair of type-1 partitions exists over a region
// whose upper shape has at most two rows or at most two columns.
inline SweepReport verify_two_row(int n, int i) {
  SweepReport rep{"two-row restriction", 0, {}};
  Grassmannian ctx(n, i);
  for (size_t b = 0; b < ctx.size(); ++b) {
    auto shape = young_shape(ctx.paths[b]);
    auto conj = conjugate_shape(shape);
    if (shape.size() > 2 && conj.size() > 2) continue;
    for (size_t a = 0; a < ctx.size(); ++a) {
      if (!ctx.leq(a, b)) continue;
      ++rep.checked;
      std::vector<DyckPartition> conf1;
      for (const DyckPartition& p : enumerate_partitions(ctx.paths[a], ctx.paths[b]))
        if (is_type1(p)) conf1.push_back(p);
      for (size_t x = 0; x < conf1.size(); ++x)
        for (size_t y = 0; y < conf1.size(); ++y)
          if (x != y && conf1[x].size() == conf1[y].size() &&
              partition_succ(conf1[x], conf1[y])) {
            std::ostringstream tag;
            tag << "(" << n << "," << i << ") " << ctx.paths[a].steps << " / "
                << ctx.paths[b].steps;
            rep.fail(tag.str() + ": equal-size comparable pair on a two-row shape");
          }
    }
  }
  return rep;
}

// Valley-lemma facts and the star-product decomposition at every valley.
inline SweepReport verify_crucial(int n, int i) {
  SweepReport rep{"valley decomposition", 0, {}};
  Grassmannian ctx(n, i);
  auto h = parabolic_h_table(ctx);
  for (const Path& w : ctx.paths)
    for (int j : valleys(w)) {
      ++rep.checked;
      std::ostringstream tag;
      tag << "(" << n << "," << i << ") " << w.steps << " valley " << j;
      try {
        if (!valley_lemma_check(ctx, w, j)) rep.fail(tag.str() + ": order/length facts fail");
        if (!crucial_decomposition_check(ctx, h, w, j))
          rep.fail(tag.str() + ": decomposition coefficients wrong");
      } catch (const std::exception& e) {
        rep.fail(tag.str() + ": " + e.what());
      }
    }
  return rep;
}

inline SweepReport verify_braid(int n) {
  SweepReport rep{"braid invariance", 0, {}};
  MPoly seed(n);
  for (int j = 1; j <= n; ++j) seed += MPoly::variable(n, j).scaled(j);
  for (std::uint32_t r = 0; r < factorial(n); ++r) {
    Perm w = perm_from_rank(n, r);
    auto words = all_reduced_words(w);
    MPoly f = seed.pow(static_cast<int>(w.length()) + 1);
    MPoly ref = demazure_word(words.front(), f);
    for (size_t k = 1; k < words.size(); ++k) {
      ++rep.checked;
      if (!(demazure_word(words[k], f) == ref)) {
        std::ostringstream tag;
        tag << "rank " << r << " word " << k;
        rep.fail(tag.str());
      }
    }
    ++rep.checked;
  }
  return rep;
}

inline SweepReport verify_positivity(int n) {
  SweepReport rep{"ample positivity", 0, {}};
  for (int i = 1; i < n; ++i) {
    MPoly rho(n);
    for (int j = 1; j <= i; ++j) rho += MPoly::variable(n, j);
    PositivityReport r = positivity_sweep(n, i, rho);
    rep.checked += r.checked;
    for (const auto& f : r.failures)
      rep.fail("(" + std::to_string(n) + "," + std::to_string(i) + ") " + f);
  }
  return rep;
}

inline SweepReport verify_pieri(int n, int i) {
  SweepReport rep{"pieri localization", 0, {}};
  PieriReport r = verify_pieri_gkm(n, i);
  rep.checked = r.checked;
  for (const auto& f : r.failures)
    rep.fail("(" + std::to_string(n) + "," + std::to_string(i) + ") " + f);
  return rep;
}

// Both module actions applied twice with the factors swapped, on random
// integer combinations of the two spanning invariants.
inline SweepReport verify_commutativity(int n, int i, int trials, unsigned seed) {
  SweepReport rep{"module action commutativity", 0, {}};
  std::mt19937 rng(seed);
  Grassmannian ctx(n, i);
  MPoly h1(n), h2(n);
  for (int j = 1; j <= i; ++j) h1 += MPoly::variable(n, j);
  for (int j = 1; j <= n; ++j) h2 += MPoly::variable(n, j);
  Path mu = top_path(n, i);
  FModuleElement fseed = f_act(h1, f_basis(mu));
  auto rand_inv = [&]() {
    int a = static_cast<int>(rng() % 9) - 4;
    int b = static_cast<int>(rng() % 9) - 4;
    return h1.scaled(a) + h2.scaled(b);
  };
  for (int t = 0; t < trials; ++t) {
    ++rep.checked;
    MPoly h = rand_inv();
    MPoly hp = rand_inv();
    const Path& lam = ctx.paths[rng() % ctx.size()];
    SchubertModuleElement xi = schubert_basis(mu, lam);
    SchubertModuleElement s1 = schubert_act(h, schubert_act(hp, xi));
    SchubertModuleElement s2 = schubert_act(hp, schubert_act(h, xi));
    if (!(s1.coeffs == s2.coeffs))
      rep.fail("schubert action trial " + std::to_string(t));
    FModuleElement f1 = f_act(h, f_act(hp, fseed));
    FModuleElement f2 = f_act(hp, f_act(h, fseed));
    if (!(f1.coeffs == f2.coeffs))
      rep.fail("descent action trial " + std::to_string(t));
  }
  return rep;
}

inline SweepReport verify_small_resolutions(int n, int i, int cap = 50) {
  SweepReport rep{"resolution characters", 0, {}};
  SmallResolutionReport r = verify_small_resolution(n, i, cap);
  rep.checked = r.orders;
  for (const auto& f : r.failures)
    rep.fail("(" + std::to_string(n) + "," + std::to_string(i) + ") " + f);
  return rep;
}

inline SweepReport verify_demaformula(int n, int maxlen, int trials, unsigned seed) {
  SweepReport rep{"product expansion lemma", 0, {}};
  std::mt19937 rng(seed);
  for (std::uint32_t r = 0; r < factorial(n); ++r) {
    Perm x = perm_from_rank(n, r);
    if (x.length() == 0 || x.length() > maxlen) continue;
    ++rep.checked;
    if (!check_demaformula(x, trials, rng)) {
      std::ostringstream tag;
      tag << "x rank " << r;
      rep.fail(tag.str());
    }
  }
  return rep;
}

// Fixed reproductions of worked examples: the length-11 figure path in
// Lambda_{8,4}, the two translation pairs over "UDUD", and the three-step
// complex over "UDUD".
inline SweepReport verify_worked_examples() {
  SweepReport rep{"worked examples", 0, {}};
  {
    ++rep.checked;
    Perm w = Perm::from_word(8, {6, 1, 3, 5, 7, 2, 4, 6, 3, 5, 4});
    if (w.length() != 11) rep.fail("figure word is not reduced of length 11");
    if (!in_minimal_coset_reps(w, 4)) rep.fail("figure permutation leaves the coset reps");
    Path p = path_of_perm(w, 8, 4);
    if (p.steps != "UDUDUUDD") rep.fail("figure path mismatch");
    std::map<int, int> labels;
    for (const Box& b : region_boxes(identity_path(8, 4), p).boxes) ++labels[b.x];
    std::map<int, int> want{{1, 1}, {2, 1}, {3, 2}, {4, 2}, {5, 2}, {6, 2}, {7, 1}};
    if (labels != want) rep.fail("figure label multiset mismatch");
  }
  {
    ++rep.checked;
    Path lam(4, 2, "UDUD");
    auto orders = neat_orders(lam);
    if (orders != std::vector<std::vector<int>>{{1, 3}, {3, 1}})
      rep.fail("neat orderings of UDUD mismatch");
    for (const auto& o : orders) {
      TranslationPair tp = translation_pair(lam, o);
      if (tp.shift != 3) rep.fail("translation pair shift is not 3");
      if (!is_reduced(tp)) rep.fail("translation pair product not reduced");
      if (end_point(tp) != perm_of_path(lam)) rep.fail("translation pair endpoint mismatch");
    }
    auto as_sets = [](const std::vector<std::set<int>>& v) {
      std::vector<std::vector<int>> out;
      for (const auto& s : v) out.emplace_back(s.begin(), s.end());
      return out;
    };
    TranslationPair t13 = translation_pair(lam, {1, 3});
    std::vector<std::vector<int>> wantI13{{}, {3}, {3}, {1, 3}};
    std::vector<std::vector<int>> wantJ13{{1, 3}, {2, 3}, {1, 3}};
    if (as_sets(t13.Ivec) != wantI13 || as_sets(t13.Jvec) != wantJ13)
      rep.fail("translation pair for order 1,3 mismatch");
    TranslationPair t31 = translation_pair(lam, {3, 1});
    std::vector<std::vector<int>> wantI31{{}, {1}, {1}, {1, 3}};
    std::vector<std::vector<int>> wantJ31{{1, 3}, {1, 2}, {1, 3}};
    if (as_sets(t31.Ivec) != wantI31 || as_sets(t31.Jvec) != wantJ31)
      rep.fail("translation pair for order 3,1 mismatch");
  }
  {
    ++rep.checked;
    Grassmannian ctx(4, 2);
    auto h = parabolic_h_table(ctx);
    auto g = inverse_g_table(ctx, h);
    RouquierTerms rt = rouquier_terms(ctx, g, Path(4, 2, "UDUD"));
    std::map<int, std::vector<std::string>> got;
    for (const auto& [deg, paths] : rt.terms)
      for (const Path& p : paths) got[deg].push_back(p.steps);
    std::map<int, std::vector<std::string>> want{
        {0, {"UDUD"}}, {-1, {"DDUU", "DUUD", "UDDU"}}, {-2, {"DUDU"}}};
    if (got != want) rep.fail("complex over UDUD mismatch");
  }
  return rep;
}

// The smallest region carrying an equal-size comparable pair of type-1
// partitions lives in Lambda_{7,3}.
inline SweepReport verify_large_example_pair() {
  SweepReport rep{"equal-size comparable pair", 0, {}};
  {
    ++rep.checked;
    Path lo = identity_path(7, 3);
    Path hi(7, 3, "UUDUDUD");
    std::vector<DyckPartition> conf1;
    for (const DyckPartition& p : enumerate_partitions(lo, hi))
      if (is_type1(p)) conf1.push_back(p);
    bool found = false;
    for (size_t x = 0; x < conf1.size() && !found; ++x)
      for (size_t y = 0; y < conf1.size() && !found; ++y)
        if (x != y && conf1[x].size() == conf1[y].size() && partition_succ(conf1[x], conf1[y]))
          found = true;
    if (!found) rep.fail("no equal-size comparable pair over the seven-column region");
  }
  return rep;
}

}  // namespace dyckgrass
