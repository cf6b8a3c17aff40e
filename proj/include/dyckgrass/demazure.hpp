#pragma once

#include "path.hpp"
#include "permutation.hpp"
#include "poly.hpp"

#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dyckgrass {

namespace detail {

// (f - t f)/(x_a - x_b) computed monomial by monomial: for exponents p at a
// and q at b with p > q the quotient is x_a^q x_b^q (sum of x_a^u x_b^v over
// u+v = p-q-1), and the p < q case is its negative mirror.
inline MPoly pair_demazure(const MPoly& f, int a, int b) {
  MPoly out(f.n());
  for (const auto& [e, c] : f.terms()) {
    int p = e[a - 1], q = e[b - 1];
    if (p == q) continue;
    int lo = std::min(p, q), gap = std::abs(p - q);
    Rat coef = p > q ? c : -c;
    std::vector<int> base = e;
    base[a - 1] = lo;
    base[b - 1] = lo;
    for (int u = 0; u <= gap - 1; ++u) {
      std::vector<int> e2 = base;
      e2[a - 1] += u;
      e2[b - 1] += gap - 1 - u;
      out.add_term(e2, coef);
    }
  }
  return out;
}

}  // namespace detail

inline MPoly demazure(int j, const MPoly& f) {
  if (j < 1 || j > f.n() - 1) throw std::out_of_range("simple reflection index");
  return detail::pair_demazure(f, j, j + 1);
}

// Operator of an arbitrary transposition (a b), a < b, w.r.t. its positive
// root x_a - x_b.
inline MPoly reflection_demazure(int a, int b, const MPoly& f) {
  if (a < 1 || b > f.n() || a >= b) throw std::out_of_range("transposition indices");
  return detail::pair_demazure(f, a, b);
}

inline bool is_reduced_word(int n, const std::vector<int>& word) {
  return Perm::from_word(n, word).length() == static_cast<int>(word.size());
}

// Composite operator along a reduced word, rightmost letter applied first.
inline MPoly demazure_word(const std::vector<int>& word, const MPoly& f) {
  if (!is_reduced_word(f.n(), word)) throw std::domain_error("word is not reduced");
  MPoly g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = demazure(*it, g);
  return g;
}

inline MPoly demazure_perm(const Perm& w, const MPoly& f) {
  return demazure_word(w.reduced_word(), f);
}

inline std::vector<std::vector<int>> all_reduced_words(const Perm& w) {
  if (w.is_identity()) return {{}};
  std::vector<std::vector<int>> out;
  for (int j = 1; j <= w.n() - 1; ++j) {
    if (!w.right_descent(j)) continue;
    for (auto word : all_reduced_words(w * Perm::simple(w.n(), j))) {
      word.push_back(j);
      out.push_back(std::move(word));
    }
  }
  return out;
}

// Covers y => x through a reflection t: y t = x with l(y) + 1 = l(x); returns
// (y, (a, b)) pairs.
inline std::vector<std::pair<Perm, std::pair<int, int>>> reflection_covers(const Perm& x) {
  std::vector<std::pair<Perm, std::pair<int, int>>> out;
  int n = x.n();
  for (int a = 1; a <= n - 1; ++a)
    for (int b = a + 1; b <= n; ++b) {
      Perm t = Perm::transposition(n, a, b);
      Perm y = x * t;
      if (y.length() + 1 == x.length()) out.push_back({y, {a, b}});
    }
  return out;
}

inline MPoly random_homogeneous(int n, int expsum, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> var(1, n);
  MPoly f(n);
  int monomials = 2 + static_cast<int>(rng() % 4);
  for (int m = 0; m < monomials; ++m) {
    std::vector<int> e(n, 0);
    for (int t = 0; t < expsum; ++t) e[var(rng) - 1] += 1;
    f.add_term(e, coef(rng));
  }
  return f;
}

// The product expansion of a composite operator: del_x(fg) equals the sum of
// del_t(f) del_y(g) over covers y => x, for f of graded degree 2 and g of
// graded degree 2 l(x) - 2. Checked on random instances.
inline bool check_demaformula(const Perm& x, int trials, std::mt19937& rng) {
  if (x.length() == 0) return true;
  int n = x.n();
  auto covers = reflection_covers(x);
  for (int t = 0; t < trials; ++t) {
    MPoly f = random_homogeneous(n, 1, rng);
    MPoly g = random_homogeneous(n, static_cast<int>(x.length()) - 1, rng);
    MPoly lhs = demazure_perm(x, f * g);
    MPoly rhs(n);
    for (const auto& [y, ab] : covers) {
      MPoly scal = reflection_demazure(ab.first, ab.second, f);
      rhs += demazure_perm(y, g).scaled(scal.value());
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

inline bool is_invariant_under(const MPoly& f, const std::set<int>& J) {
  for (int j : J)
    if (!(f.apply_perm(Perm::simple(f.n(), j)) == f)) return false;
  return true;
}

// Ampleness of a degree-2 invariant: the single Demazure operator outside the
// parabolic evaluates to a positive constant.
inline bool is_ample(int n, int i, const MPoly& rho) {
  if (rho.n() != n) throw std::invalid_argument("variable count mismatch");
  if (!rho.is_zero() && !(rho.is_homogeneous() && rho.degree() == 2))
    throw std::domain_error("not homogeneous of degree 2");
  if (!is_invariant_under(rho, grassmannian_parabolic(n, i)))
    throw std::domain_error("not invariant under the parabolic");
  MPoly d = demazure(i, rho);
  return d.is_constant() && d.value() > 0;
}

struct PositivityReport {
  long checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// For every minimal coset representative w: del_w(rho^{l(w)}) is a positive
// rational, and along one reduced word every partial application
// del_{s_k}(s_{k+1} ... s_l (rho)) is positive.
inline PositivityReport positivity_sweep(int n, int i, const MPoly& rho) {
  PositivityReport rep;
  Grassmannian ctx(n, i);
  for (const Path& p : ctx.paths) {
    Perm w = perm_of_path(p);
    ++rep.checked;
    int lw = static_cast<int>(w.length());
    MPoly val = demazure_perm(w, rho.pow(lw));
    std::ostringstream tag;
    tag << p.steps;
    if (!val.is_constant() || !(val.value() > 0)) {
      rep.failures.push_back(tag.str() + ": top value not positive");
      continue;
    }
    std::vector<int> word = w.reduced_word();
    for (size_t k = 0; k < word.size(); ++k) {
      MPoly cur = rho;
      for (size_t t = word.size(); t-- > k + 1;)
        cur = cur.apply_perm(Perm::simple(n, word[t]));
      MPoly part = demazure(word[k], cur);
      if (!part.is_constant() || !(part.value() > 0)) {
        rep.failures.push_back(tag.str() + ": partial positivity fails");
        break;
      }
    }
  }
  return rep;
}

// Localization of a Schubert class at a point, by summing over reduced
// subwords of a fixed word for w that multiply to v; each chosen letter
// contributes the positive root carried to it by the prefix.
inline MPoly billey_restriction(const Perm& v, const Perm& w) {
  int n = v.n();
  std::vector<int> word = w.reduced_word();
  int m = static_cast<int>(v.length());
  std::vector<MPoly> carried;  // carried[c] = (s_{a_1}..s_{a_c-1})(alpha_{a_c})
  {
    Perm pref(n);
    for (size_t c = 0; c < word.size(); ++c) {
      carried.push_back(simple_root(n, word[c]).apply_perm(pref));
      pref = pref * Perm::simple(n, word[c]);
    }
  }
  MPoly total(n);
  std::function<void(size_t, const Perm&, const MPoly&, int)> rec =
      [&](size_t c, const Perm& prod, const MPoly& acc, int used) {
        if (used == m) {
          if (prod == v) total += acc;
          return;
        }
        if (c >= word.size() || static_cast<int>(word.size() - c) < m - used) return;
        rec(c + 1, prod, acc, used);
        Perm nxt = prod * Perm::simple(n, word[c]);
        if (nxt.length() == prod.length() + 1) rec(c + 1, nxt, acc * carried[c], used + 1);
      };
  rec(0, Perm(n), MPoly::constant(n, 1), 0);
  return total;
}

}  // namespace dyckgrass
