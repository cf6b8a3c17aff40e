#pragma once

#include "demazure.hpp"
#include "dyck.hpp"
#include "path.hpp"
#include "poly.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dyckgrass {

struct SchubertModuleElement {
  Path mu;
  std::map<Path, MPoly> coeffs;
};

inline SchubertModuleElement schubert_basis(const Path& mu, const Path& lam) {
  if (!bruhat_leq(lam, mu)) throw std::invalid_argument("basis path not below ambient path");
  SchubertModuleElement e{mu, {}};
  e.coeffs.emplace(lam, MPoly::constant(mu.n, 1));
  return e;
}

inline void require_invariant_weight(int n, int i, const MPoly& h) {
  if (h.n() != n) throw std::domain_error("variable count mismatch");
  if (!h.is_zero() && !(h.is_homogeneous() && h.degree() == 2))
    throw std::domain_error("weight must be homogeneous of degree 2");
  if (!is_invariant_under(h, grassmannian_parabolic(n, i)))
    throw std::domain_error("weight must be invariant under the parabolic");
}

// Valleys carry the single boxes addable to a path.
inline std::vector<int> addable_box_columns(const Path& p) { return valleys(p); }

// Right action of a degree-2 invariant on the Schubert basis: diagonal part
// twisted by the indexing path, off-diagonal part adding one box at a time.
inline SchubertModuleElement schubert_act(const MPoly& h, const SchubertModuleElement& xi) {
  int n = xi.mu.n, i = xi.mu.i;
  require_invariant_weight(n, i, h);
  Rat di = demazure(i, h).value();
  SchubertModuleElement out{xi.mu, {}};
  auto add = [&](const Path& lam, const MPoly& f) {
    if (f.is_zero()) return;
    auto it = out.coeffs.find(lam);
    if (it == out.coeffs.end())
      out.coeffs.emplace(lam, f);
    else {
      it->second += f;
      if (it->second.is_zero()) out.coeffs.erase(it);
    }
  };
  for (const auto& [lam, f] : xi.coeffs) {
    add(lam, f * h.apply_perm(perm_of_path(lam)));
    if (di == 0) continue;
    for (int x : addable_box_columns(lam)) {
      Path up = flip_steps(lam, x);
      if (bruhat_leq(up, xi.mu)) add(up, f.scaled(di));
    }
  }
  return out;
}

// Index of the F basis: a lower path together with the partition recording the
// strips peeled off so far. Indices whose partition fails type 1 sit outside
// the declared basis and stay formal.
struct FIdx {
  Path nu;
  DyckPartition part;
  bool operator<(const FIdx& o) const {
    if (nu != o.nu) return nu < o.nu;
    return part < o.part;
  }
  bool operator==(const FIdx& o) const { return nu == o.nu && part == o.part; }
};

inline bool is_formal_index(const FIdx& idx) { return !is_type1(idx.part); }

struct FModuleElement {
  Path mu;
  std::map<FIdx, MPoly> coeffs;
};

inline FModuleElement f_basis(const Path& mu) {
  FModuleElement e{mu, {}};
  e.coeffs.emplace(FIdx{mu, {}}, MPoly::constant(mu.n, 1));
  return e;
}

// Right action on the F basis: diagonal part twisted by the lower path, plus
// one new single-box strip peeled from it per term.
inline FModuleElement f_act(const MPoly& h, const FModuleElement& xi) {
  int n = xi.mu.n, i = xi.mu.i;
  require_invariant_weight(n, i, h);
  Rat di = demazure(i, h).value();
  FModuleElement out{xi.mu, {}};
  auto add = [&](const FIdx& idx, const MPoly& f) {
    if (f.is_zero()) return;
    auto it = out.coeffs.find(idx);
    if (it == out.coeffs.end())
      out.coeffs.emplace(idx, f);
    else {
      it->second += f;
      if (it->second.is_zero()) out.coeffs.erase(it);
    }
  };
  for (const auto& [idx, f] : xi.coeffs) {
    add(idx, f * h.apply_perm(perm_of_path(idx.nu)));
    if (di == 0) continue;
    for (const DyckStrip& c : removable_strips(idx.nu)) {
      if (strip_length(c) != 1) continue;
      Path down = remove_strip(idx.nu, c);
      DyckPartition part = idx.part;
      part.push_back(c);
      std::sort(part.begin(), part.end());
      add(FIdx{down, part}, f.scaled(di));
    }
  }
  return out;
}

struct GKMClass {
  Path mu;
  std::map<Path, MPoly> values;
};

// Restriction of the module's Schubert class at a fixed point. The classes
// normalized so the Pieri action has unit box coefficients restrict to
// products of the roots x_{b}-x_{a} with a<b, i.e. Billey sums with each
// simple root negated.
inline MPoly schubert_restriction(const Perm& v, const Perm& w) {
  MPoly f = billey_restriction(v, w);
  return (v.length() % 2) ? f.scaled(-1) : f;
}

inline GKMClass gkm_schubert(const Grassmannian& ctx, const Path& lam, const Path& mu) {
  if (!bruhat_leq(lam, mu)) throw std::invalid_argument("class path not below ambient path");
  GKMClass cls{mu, {}};
  Perm pl = perm_of_path(lam);
  int ib = static_cast<int>(ctx.idx(mu));
  for (int w = 0; w < static_cast<int>(ctx.size()); ++w) {
    if (!ctx.leq(w, ib)) continue;
    cls.values.emplace(ctx.paths[w], schubert_restriction(pl, perm_of_path(ctx.paths[w])));
  }
  return cls;
}

struct PieriReport {
  long checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Pointwise comparison of the abstract Pieri action with the localization
// model, where the right action multiplies each value by the twisted weight.
inline PieriReport verify_pieri_gkm(int n, int i) {
  Grassmannian ctx(n, i);
  PieriReport rep;
  MPoly h1(n), h2(n);
  for (int j = 1; j <= i; ++j) h1 += MPoly::variable(n, j);
  for (int j = 1; j <= n; ++j) h2 += MPoly::variable(n, j);
  std::map<std::pair<std::uint32_t, std::uint32_t>, MPoly> cache;
  auto billey = [&](const Path& a, const Path& b) -> const MPoly& {
    Perm pa = perm_of_path(a), pb = perm_of_path(b);
    auto key = std::make_pair(pa.rank(), pb.rank());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, schubert_restriction(pa, pb)).first;
    return it->second;
  };
  for (int mb = 0; mb < static_cast<int>(ctx.size()); ++mb) {
    const Path& mu = ctx.paths[mb];
    for (int lb = 0; lb < static_cast<int>(ctx.size()); ++lb) {
      if (!ctx.leq(lb, mb)) continue;
      const Path& lam = ctx.paths[lb];
      for (const MPoly* h : {&h1, &h2}) {
        ++rep.checked;
        SchubertModuleElement acted = schubert_act(*h, schubert_basis(mu, lam));
        bool good = true;
        for (int wb = 0; wb < static_cast<int>(ctx.size()) && good; ++wb) {
          if (!ctx.leq(wb, mb)) continue;
          const Path& w = ctx.paths[wb];
          MPoly lhs(n);
          for (const auto& [kap, f] : acted.coeffs) lhs += f * billey(kap, w);
          MPoly rhs = billey(lam, w) * h->apply_perm(perm_of_path(w));
          if (!(lhs == rhs)) good = false;
        }
        if (!good) {
          std::ostringstream tag;
          tag << mu.steps << " / " << lam.steps;
          rep.failures.push_back(tag.str());
        }
      }
    }
  }
  return rep;
}

}  // namespace dyckgrass
