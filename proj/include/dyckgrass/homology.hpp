#pragma once

#include "dyck.hpp"
#include "hecke.hpp"
#include "path.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace dyckgrass {

// 1 when the region between the two comparable paths is a single Dyck strip.
inline int hom1_dim(const Path& a, const Path& b) {
  if (a == b) throw std::invalid_argument("paths coincide: use the graded rank");
  const Path* lo = nullptr;
  const Path* hi = nullptr;
  if (bruhat_leq(a, b)) {
    lo = &a;
    hi = &b;
  } else if (bruhat_leq(b, a)) {
    lo = &b;
    hi = &a;
  } else {
    return 0;
  }
  return is_dyck_strip(region_boxes(*lo, *hi).boxes) ? 1 : 0;
}

inline std::vector<Path> single_strip_removals(const Path& p) {
  std::vector<Path> out;
  for (const DyckStrip& d : removable_strips(p)) out.push_back(remove_strip(p, d));
  return out;
}

// Degree-2 coefficient of h plus the count of common lower neighbors by one
// strip on each side.
inline int hom2_dim(const Grassmannian& ctx, const std::vector<std::vector<Laurent>>& h,
                    const Path& a, const Path& b) {
  if (!(bruhat_leq(a, b) && !(a == b))) throw std::invalid_argument("need strictly smaller first path");
  Laurent hp = h[ctx.idx(a)][ctx.idx(b)];
  int count = 0;
  std::set<Path> below_a;
  for (const Path& nu : single_strip_removals(a)) below_a.insert(nu);
  for (const Path& nu : single_strip_removals(b))
    if (below_a.count(nu)) ++count;
  Int c2 = hp.coeff(2);
  return static_cast<int>(c2) + count;
}

inline Laurent hom_rank_notless(const Path& a, const Path& b) { return q1(a, b); }

// Graded rank of the cellular basis: pairs of type-1 partitions from a common
// lower path.
inline Laurent cellular_rank(const Grassmannian& ctx, const Path& a, const Path& b) {
  Laurent out;
  int ia = static_cast<int>(ctx.idx(a)), ib = static_cast<int>(ctx.idx(b));
  for (int nu = 0; nu < static_cast<int>(ctx.size()); ++nu) {
    if (!ctx.leq(nu, ia) || !ctx.leq(nu, ib)) continue;
    out += q1(ctx.paths[nu], a) * q1(ctx.paths[nu], b);
  }
  return out;
}

struct RouquierTerms {
  Path mu;
  std::map<int, std::vector<Path>> terms;  // homological degree (<= 0) -> paths
};

// Terms of the singular Rouquier complex: each path with nonzero inverse
// polynomial v^k sits in homological degree -k.
inline RouquierTerms rouquier_terms(const Grassmannian& ctx,
                                    const std::vector<std::vector<Laurent>>& g, const Path& mu) {
  RouquierTerms rt;
  rt.mu = mu;
  int ib = static_cast<int>(ctx.idx(mu));
  for (int a = 0; a < static_cast<int>(ctx.size()); ++a) {
    const Laurent& gl = g[a][ib];
    if (gl.is_zero()) continue;
    if (gl.min_exp() != gl.max_exp() || gl.coeff(gl.min_exp()) != 1)
      throw std::logic_error("inverse polynomial is not a monic monomial");
    rt.terms[-gl.min_exp()].push_back(ctx.paths[a]);
  }
  return rt;
}

// Alternating sum of KL basis elements against the inverse polynomials
// collapses to the standard basis element.
inline bool euler_check(const Grassmannian& ctx, const std::vector<std::vector<Laurent>>& h,
                        const std::vector<std::vector<Laurent>>& g, const Path& mu) {
  int m = static_cast<int>(ctx.size());
  int ib = static_cast<int>(ctx.idx(mu));
  PModElt acc;
  for (int a = 0; a < m; ++a) {
    if (g[a][ib].is_zero()) continue;
    int sign = (ctx.len[ib] - ctx.len[a]) % 2 == 0 ? 1 : -1;
    Laurent c = sign == 1 ? g[a][ib] : -g[a][ib];
    for (int r = 0; r < m; ++r) pmod_add(acc, r, c * h[r][a]);
  }
  PModElt want;
  want[ib] = Laurent(1);
  return acc == want;
}

struct DiffEdge {
  int from_deg = 0;
  Path from;
  int to_deg = 0;
  Path to;
  bool guaranteed = false;
};

struct DiffSupport {
  RouquierTerms nodes;
  std::vector<DiffEdge> edges;
};

// Support of the first differentials: guaranteed edges where the target is the
// source plus one strip, flip candidates where it is the source minus one.
inline DiffSupport diff_support(const Grassmannian& ctx,
                                const std::vector<std::vector<Laurent>>& g, const Path& mu) {
  DiffSupport ds;
  ds.nodes = rouquier_terms(ctx, g, mu);
  for (const auto& [deg, lams] : ds.nodes.terms) {
    auto up = ds.nodes.terms.find(deg + 1);
    if (up == ds.nodes.terms.end()) continue;
    for (const Path& nu : lams)
      for (const Path& lam : up->second) {
        if (bruhat_leq(nu, lam) && !(nu == lam) &&
            is_dyck_strip(region_boxes(nu, lam).boxes))
          ds.edges.push_back({deg, nu, deg + 1, lam, true});
        else if (bruhat_leq(lam, nu) && !(nu == lam) &&
                 is_dyck_strip(region_boxes(lam, nu).boxes))
          ds.edges.push_back({deg, nu, deg + 1, lam, false});
      }
  }
  return ds;
}

// Every strictly negative column supports at least one outgoing edge.
inline bool diff_support_covered(const DiffSupport& ds) {
  for (const auto& [deg, lams] : ds.nodes.terms) {
    if (deg == 0) continue;
    for (const Path& nu : lams) {
      bool hit = false;
      for (const DiffEdge& e : ds.edges)
        if (e.from_deg == deg && e.from == nu) hit = true;
      if (!hit) return false;
    }
  }
  return true;
}

}  // namespace dyckgrass
