#pragma once

#include "laurent.hpp"
#include "path.hpp"
#include "permutation.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace dyckgrass {

// Element of the Hecke algebra of S_n in the standard basis H_w, with
// coefficients keyed by permutation rank.
class HeckeElt {
 public:
  explicit HeckeElt(int n) : n_(n) {}

  static HeckeElt basis(const Perm& w) {
    HeckeElt e(w.n());
    e.c_[w.rank()] = Laurent(1);
    return e;
  }
  static HeckeElt unit(int n) { return basis(Perm(n)); }

  int n() const { return n_; }
  bool is_zero() const { return c_.empty(); }
  const std::map<std::uint32_t, Laurent>& terms() const { return c_; }

  Laurent coeff(const Perm& w) const {
    auto it = c_.find(w.rank());
    return it == c_.end() ? Laurent() : it->second;
  }

  void add_term(const Perm& w, const Laurent& a) { add_rank(w.rank(), a); }
  void add_rank(std::uint32_t r, const Laurent& a) {
    if (a.is_zero()) return;
    auto it = c_.find(r);
    if (it == c_.end()) {
      c_[r] = a;
    } else {
      it->second += a;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  HeckeElt& operator+=(const HeckeElt& o) {
    check(o);
    for (const auto& [r, a] : o.c_) add_rank(r, a);
    return *this;
  }
  HeckeElt& operator-=(const HeckeElt& o) {
    check(o);
    for (const auto& [r, a] : o.c_) add_rank(r, -a);
    return *this;
  }
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }

  HeckeElt scaled(const Laurent& a) const {
    HeckeElt e(n_);
    if (a.is_zero()) return e;
    for (const auto& [r, c] : c_) e.c_[r] = c * a;
    return e;
  }

  bool operator==(const HeckeElt& o) const { return n_ == o.n_ && c_ == o.c_; }
  bool operator!=(const HeckeElt& o) const { return !(*this == o); }

 private:
  void check(const HeckeElt& o) const {
    if (n_ != o.n_) throw std::invalid_argument("mixed symmetric group ranks");
  }
  int n_;
  std::map<std::uint32_t, Laurent> c_;
};

// Right multiplication by H_{s_j}.
inline HeckeElt mul_simple(const HeckeElt& a, int j) {
  HeckeElt out(a.n());
  Perm s = Perm::simple(a.n(), j);
  for (const auto& [r, c] : a.terms()) {
    Perm w = perm_from_rank(a.n(), r);
    Perm ws = w * s;
    if (!w.right_descent(j)) {
      out.add_term(ws, c);
    } else {
      out.add_term(ws, c);
      Laurent d = Laurent::v(-1) - Laurent::v(1);
      out.add_term(w, c * d);
    }
  }
  return out;
}

inline HeckeElt hecke_mul(const HeckeElt& a, const HeckeElt& b) {
  if (a.n() != b.n()) throw std::invalid_argument("mixed symmetric group ranks");
  HeckeElt out(a.n());
  for (const auto& [r, c] : b.terms()) {
    Perm x = perm_from_rank(b.n(), r);
    HeckeElt part = a;
    for (int j : x.reduced_word()) part = mul_simple(part, j);
    out += part.scaled(c);
  }
  return out;
}

// KL basis element of a simple reflection: H_s + v.
inline HeckeElt kl_simple(int n, int j) {
  HeckeElt e = HeckeElt::basis(Perm::simple(n, j));
  e.add_term(Perm(n), Laurent::v(1));
  return e;
}

// KL basis element of the longest element of a parabolic subgroup.
inline HeckeElt kl_longest(int n, const std::set<int>& J) {
  HeckeElt e(n);
  int top = longest_length(n, J);
  for (const Perm& w : parabolic_elements(n, J))
    e.add_term(w, Laurent::v(top - static_cast<int>(w.length())));
  return e;
}

// Graded size of a parabolic subgroup, the eigenvalue of kl_longest squared.
inline Laurent poincare(int n, const std::set<int>& J) {
  Laurent p;
  int top = longest_length(n, J);
  for (const Perm& w : parabolic_elements(n, J))
    p += Laurent::v(top - 2 * static_cast<int>(w.length()));
  return p;
}

// a *_J b: the product divided coefficient-wise by poincare(J); throws when
// some coefficient is not exactly divisible.
inline HeckeElt star_mul(const HeckeElt& a, const HeckeElt& b, const std::set<int>& J) {
  HeckeElt prod = hecke_mul(a, b);
  Laurent pi = poincare(a.n(), J);
  HeckeElt out(a.n());
  for (const auto& [r, c] : prod.terms()) {
    auto q = c.divide_exact(pi);
    if (!q) throw std::domain_error("star product not defined: inexact division");
    out.add_rank(r, *q);
  }
  return out;
}

// Minimal length representative of x W_J: sort the one-line entries of x
// ascending within each block of J-connected positions.
inline Perm coset_min_rep(const Perm& x, const std::set<int>& J) {
  std::vector<int> w = x.one_line();
  int n = x.n();
  int k = 1;
  while (k <= n) {
    if (!J.count(k)) {
      ++k;
      continue;
    }
    int e = k;
    while (e <= n - 1 && J.count(e)) ++e;
    std::sort(w.begin() + (k - 1), w.begin() + e);
    k = e + 1;
  }
  return Perm(w);
}

// H_x . kl_longest(J) in closed form: with x = u y, y in W_J and u the minimal
// coset representative, this is v^{-l(y)} sum_w v^{l(w_J)-l(w)} H_{u w}.
inline HeckeElt basis_times_kl_longest(const Perm& x, const std::set<int>& J) {
  Perm u = coset_min_rep(x, J);
  int ly = static_cast<int>(x.length() - u.length());
  int top = longest_length(x.n(), J);
  HeckeElt out(x.n());
  for (const Perm& w : parabolic_elements(x.n(), J))
    out.add_term(u * w, Laurent::v(top - static_cast<int>(w.length()) - ly));
  return out;
}

// Fast star product against kl_longest(J) for X known to lie in H . kl_longest(K),
// K a subset of J: read off the coset coefficients at the longest coset members
// and rebuild with basis_times_kl_longest. Agrees with star_mul(X, kl_longest(J), K).
inline HeckeElt star_longest_fast(const HeckeElt& X, const std::set<int>& K,
                                  const std::set<int>& J) {
  HeckeElt out(X.n());
  for (const auto& [r, c] : X.terms()) {
    Perm z = perm_from_rank(X.n(), r);
    bool top_of_coset = true;
    for (int k : K)
      if (!z.right_descent(k)) top_of_coset = false;
    if (!top_of_coset) continue;
    Perm u = coset_min_rep(z, K);
    out += basis_times_kl_longest(u, J).scaled(c);
  }
  return out;
}

// Element of the spherical module with basis indexed by the paths of a
// Grassmannian context.
using PModElt = std::map<int, Laurent>;

inline void pmod_add(PModElt& e, int idx, const Laurent& a) {
  if (a.is_zero()) return;
  auto it = e.find(idx);
  if (it == e.end()) {
    e[idx] = a;
  } else {
    it->second += a;
    if (it->second.is_zero()) e.erase(it);
  }
}

// Right action of H_{s_j} on the spherical module.
inline PModElt module_act(const Grassmannian& ctx, const PModElt& e, int j) {
  PModElt out;
  for (const auto& [idx, c] : e) {
    const Path& p = ctx.paths[idx];
    switch (classify_position(p, j)) {
      case StepKind::Valley:
        pmod_add(out, ctx.idx(flip_steps(p, j)), c);
        break;
      case StepKind::Peak:
        pmod_add(out, ctx.idx(flip_steps(p, j)), c);
        pmod_add(out, idx, c * (Laurent::v(-1) - Laurent::v(1)));
        break;
      default:
        pmod_add(out, idx, c * Laurent::v(-1));
    }
  }
  return out;
}

// Right action of H_{s_j} + v.
inline PModElt module_act_kl(const Grassmannian& ctx, const PModElt& e, int j) {
  PModElt out = module_act(ctx, e, j);
  for (const auto& [idx, c] : e) pmod_add(out, idx, c * Laurent::v(1));
  return out;
}

// Table h[a][b] of parabolic KL polynomials indexed by path positions in the
// canonical enumeration; column b is the KL basis element of path b expanded
// in the standard module basis. Built by the usual self-correcting recursion.
inline std::vector<std::vector<Laurent>> parabolic_h_table(const Grassmannian& ctx) {
  int m = static_cast<int>(ctx.size());
  std::vector<std::vector<Laurent>> h(m, std::vector<Laurent>(m));
  for (int b = 0; b < m; ++b) {
    const Path& mu = ctx.paths[b];
    auto pk = peaks(mu);
    if (pk.empty()) {
      h[b][b] = Laurent(1);
      continue;
    }
    int j = pk.front();
    int bp = ctx.idx(flip_steps(mu, j));
    PModElt cand;
    for (int r = 0; r < m; ++r) pmod_add(cand, r, h[r][bp]);
    cand = module_act_kl(ctx, cand, j);
    for (int z = b - 1; z >= 0; --z) {
      auto it = cand.find(z);
      if (it == cand.end()) continue;
      Int m0 = it->second.coeff(0);
      if (m0 == 0) continue;
      for (int r = 0; r < m; ++r) pmod_add(cand, r, h[r][z] * Laurent(-m0));
    }
    auto self = cand.find(b);
    if (self == cand.end() || self->second != Laurent(1))
      throw std::logic_error("kl recursion: leading coefficient is not 1");
    for (const auto& [r, c] : cand) {
      if (r != b && !c.is_zero() && c.min_exp() < 1)
        throw std::logic_error("kl recursion: correction left a constant term");
      h[r][b] = c;
    }
  }
  return h;
}

// Table g[a][b] of inverse parabolic KL polynomials: the signed matrix
// (-1)^(l(b)-l(a)) g[a][b] is the two-sided inverse of h.
inline std::vector<std::vector<Laurent>> inverse_g_table(const Grassmannian& ctx,
                                                         const std::vector<std::vector<Laurent>>& h) {
  int m = static_cast<int>(ctx.size());
  std::vector<std::vector<Laurent>> gs(m, std::vector<Laurent>(m));
  for (int a = 0; a < m; ++a) {
    gs[a][a] = Laurent(1);
    for (int b = a + 1; b < m; ++b) {
      if (!ctx.leq(a, b)) continue;
      Laurent acc;
      for (int nu = a; nu < b; ++nu) {
        if (!ctx.leq(a, nu) || !ctx.leq(nu, b)) continue;
        acc += gs[a][nu] * h[nu][b];
      }
      gs[a][b] = -acc;
    }
  }
  std::vector<std::vector<Laurent>> g(m, std::vector<Laurent>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int sign = (ctx.len[b] - ctx.len[a]) % 2 == 0 ? 1 : -1;
      g[a][b] = sign == 1 ? gs[a][b] : -gs[a][b];
    }
  return g;
}

// KL basis element of path b, lifted to the Hecke algebra: the h-column of b
// applied to standard basis elements times kl_longest of the column set I.
inline HeckeElt kl_lift(const Grassmannian& ctx, const std::vector<std::vector<Laurent>>& h,
                        int b, const std::set<int>& I) {
  HeckeElt out(ctx.n);
  for (int r = 0; r < static_cast<int>(ctx.size()); ++r) {
    if (h[r][b].is_zero()) continue;
    out += basis_times_kl_longest(perm_of_path(ctx.paths[r]), I).scaled(h[r][b]);
  }
  return out;
}

// Expand an element known to lie in the span of the lifted KL basis; returns
// coefficients by path index. Throws when a nonzero residue remains.
inline std::map<int, Laurent> kl_expand(const Grassmannian& ctx,
                                        const std::vector<std::vector<Laurent>>& h,
                                        const HeckeElt& x, const std::set<int>& I) {
  HeckeElt res = x;
  std::map<int, Laurent> out;
  Perm wI = longest_element(ctx.n, I);
  for (int b = static_cast<int>(ctx.size()) - 1; b >= 0; --b) {
    Perm lead = perm_of_path(ctx.paths[b]) * wI;
    Laurent c = res.coeff(lead);
    if (c.is_zero()) continue;
    res -= kl_lift(ctx, h, b, I).scaled(c);
    out[b] = c;
  }
  if (!res.is_zero()) throw std::domain_error("element not in the lifted KL span");
  return out;
}

// The maximal descending run ending at a valley j and ascending run after it,
// as the closed step interval [a, b].
inline std::pair<int, int> valley_runs(const Path& w, int j) {
  if (classify_position(w, j) != StepKind::Valley)
    throw std::invalid_argument("position is not a valley");
  int a = j;
  while (a > 1 && w.steps[a - 2] == 'D') --a;
  int b = j + 1;
  while (b < w.n && w.steps[b] == 'U') ++b;
  return {a, b};
}

// Embeds a permutation of {1..m} into S_n acting on positions a..a+m-1.
inline Perm embed_perm(const Perm& x, int a, int n) {
  std::vector<int> w(n);
  for (int k = 1; k <= n; ++k) w[k - 1] = k;
  for (int k = 1; k <= x.n(); ++k) w[a + k - 2] = x(k) + a - 1;
  return Perm(w);
}

// Order and length facts around a valley: no multiple of a strictly smaller
// path climbs back above w, and minimal-coset multiples stay in the path set
// with additive length.
inline bool valley_lemma_check(const Grassmannian& ctx, const Path& w, int j) {
  auto [a, b] = valley_runs(w, j);
  std::set<int> run;
  for (int k = a; k <= b - 1; ++k) run.insert(k);
  std::set<int> Jhat = run;
  Jhat.erase(j);
  Perm pw = perm_of_path(w);
  auto group = parabolic_elements(ctx.n, run);
  for (size_t vi = 0; vi < ctx.size(); ++vi) {
    const Path& v = ctx.paths[vi];
    if (v == w || !bruhat_leq(v, w)) continue;
    Perm pv = perm_of_path(v);
    for (const Perm& x : group)
      if (pw.bruhat_leq(x * pv)) return false;
  }
  for (const Perm& x : group) {
    if (!(coset_min_rep(x, Jhat) == x)) continue;
    Perm xw = x * pw;
    if (!in_minimal_coset_reps(xw, ctx.i)) return false;
    if (xw.length() != x.length() + pw.length()) return false;
  }
  return true;
}

// Star-product decomposition at a valley: for each minimal x in the run
// subgroup, the product H^J-hat_x *_Jhat kl-basis(w) expands with coefficient
// exactly 1 at xw and no other term above w.
inline bool crucial_decomposition_check(const Grassmannian& ctx,
                                        const std::vector<std::vector<Laurent>>& h,
                                        const Path& w, int j) {
  auto [a, b] = valley_runs(w, j);
  std::set<int> Jhat;
  for (int k = a; k <= b - 1; ++k)
    if (k != j) Jhat.insert(k);
  Grassmannian sub(b - a + 1, j - a + 1);
  auto hsub = parabolic_h_table(sub);
  std::set<int> I = grassmannian_parabolic(ctx.n, ctx.i);
  HeckeElt welt = kl_lift(ctx, h, static_cast<int>(ctx.idx(w)), I);
  Perm pw = perm_of_path(w);
  int widx = static_cast<int>(ctx.idx(w));
  for (size_t xb = 0; xb < sub.size(); ++xb) {
    HeckeElt xelt(ctx.n);
    for (size_t r = 0; r < sub.size(); ++r) {
      const Laurent& c = hsub[r][xb];
      if (c.is_zero()) continue;
      Perm er = embed_perm(perm_of_path(sub.paths[r]), a, ctx.n);
      xelt += basis_times_kl_longest(er, Jhat).scaled(c);
    }
    Perm px = embed_perm(perm_of_path(sub.paths[xb]), a, ctx.n);
    Path xw = path_of_perm(px * pw, ctx.n, ctx.i);
    int target = static_cast<int>(ctx.idx(xw));
    auto expansion = kl_expand(ctx, h, star_mul(xelt, welt, Jhat), I);
    bool saw_target = false;
    for (const auto& [z, c] : expansion) {
      if (!ctx.leq(widx, z)) continue;
      if (z != target || !(c == Laurent(1))) return false;
      saw_target = true;
    }
    if (!saw_target) return false;
  }
  return true;
}

}  // namespace dyckgrass
