#pragma once

#include "hecke.hpp"
#include "path.hpp"
#include "permutation.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dyckgrass {

struct FlattenInfo {
  Path result;
  int a, b;  // bounding indices of the reversed segment [a+1, b-1]
};

inline FlattenInfo flatten_info(const Path& p, int pk) {
  if (classify_position(p, pk) != StepKind::Peak)
    throw std::invalid_argument("position is not a peak");
  int a = 0;
  for (int idx = pk - 1; idx >= 1; --idx)
    if (p.steps[idx - 1] == 'D') {
      a = idx;
      break;
    }
  int b = p.n + 1;
  for (int idx = pk + 1; idx <= p.n; ++idx)
    if (p.steps[idx - 1] == 'U') {
      b = idx;
      break;
    }
  Path q = p;
  std::reverse(q.steps.begin() + a, q.steps.begin() + (b - 1));
  return {Path(q.n, q.i, q.steps), a, b};
}

inline Path flatten_peak(const Path& p, int pk) { return flatten_info(p, pk).result; }

// Peaks eligible to start a neat ordering: height at most that of the nearest
// peak on either side.
inline std::vector<int> neat_choices(const Path& p) {
  auto pk = peaks(p);
  std::vector<int> out;
  for (size_t k = 0; k < pk.size(); ++k) {
    int h = height(p, pk[k]);
    if (k > 0 && height(p, pk[k - 1]) < h) continue;
    if (k + 1 < pk.size() && height(p, pk[k + 1]) < h) continue;
    out.push_back(pk[k]);
  }
  return out;
}

namespace detail {

inline void neat_rec(const Path& p, std::vector<int>& prefix,
                     std::vector<std::vector<int>>& out, size_t cap) {
  if (out.size() >= cap) return;
  auto choices = neat_choices(p);
  if (choices.empty()) {
    out.push_back(prefix);
    return;
  }
  for (int c : choices) {
    if (out.size() >= cap) return;
    prefix.push_back(c);
    neat_rec(flatten_peak(p, c), prefix, out, cap);
    prefix.pop_back();
  }
}

}  // namespace detail

inline std::vector<std::vector<int>> neat_orders(const Path& p, size_t cap = 50) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  detail::neat_rec(p, prefix, out, cap);
  return out;
}

inline bool is_neat(const Path& p, const std::vector<int>& order) {
  Path cur = p;
  for (int pk : order) {
    auto choices = neat_choices(cur);
    if (std::find(choices.begin(), choices.end(), pk) == choices.end()) return false;
    cur = flatten_peak(cur, pk);
  }
  return peaks(cur).empty();
}

struct TranslationPair {
  int n = 0;
  std::vector<std::set<int>> Ivec;  // I_0 .. I_k
  std::vector<std::set<int>> Jvec;  // J_1 .. J_k
  int shift = 0;
};

inline int pair_length(const TranslationPair& tp) {
  int s = 0;
  for (const auto& J : tp.Jvec) s += longest_length(tp.n, J);
  for (const auto& I : tp.Ivec) s -= longest_length(tp.n, I);
  return s;
}

// The first peak of the order is peeled as the outermost tensor factor: each
// flatten contributes its start descent set to J and its punctured descent
// set (the flattened path's descents minus the frame positions a, b-1) to I.
inline TranslationPair translation_pair(const Path& p, const std::vector<int>& order) {
  if (!is_neat(p, order)) throw std::invalid_argument("ordering is not neat");
  std::set<int> I = grassmannian_parabolic(p.n, p.i);
  TranslationPair tp;
  tp.n = p.n;
  tp.Ivec.push_back({});
  Path cur = p;
  for (int pk : order) {
    FlattenInfo f = flatten_info(cur, pk);
    tp.Jvec.push_back(descent_set(cur));
    std::set<int> mid = descent_set(f.result);
    mid.erase(f.a);
    mid.erase(f.b - 1);
    tp.Ivec.push_back(mid);
    cur = f.result;
  }
  if (!peaks(cur).empty()) throw std::logic_error("neat order did not flatten the path");
  tp.Jvec.push_back(I);
  tp.Ivec.push_back(I);
  tp.shift = pair_length(tp);
  return tp;
}

inline void validate_pair(const TranslationPair& tp) {
  if (tp.n < 2 || tp.Jvec.empty() || tp.Ivec.size() != tp.Jvec.size() + 1)
    throw std::invalid_argument("malformed translation pair");
  for (size_t h = 0; h < tp.Jvec.size(); ++h) {
    const auto& J = tp.Jvec[h];
    for (int s : tp.Ivec[h])
      if (!J.count(s)) throw std::invalid_argument("pair interlacing violated");
    for (int s : tp.Ivec[h + 1])
      if (!J.count(s)) throw std::invalid_argument("pair interlacing violated");
  }
}

inline Perm end_point(const TranslationPair& tp) {
  validate_pair(tp);
  Perm v(tp.n);
  for (size_t h = 0; h < tp.Jvec.size(); ++h)
    v = v * longest_element(tp.n, tp.Jvec[h]) * longest_element(tp.n, tp.Ivec[h + 1]);
  return v;
}

inline bool is_reduced(const TranslationPair& tp) {
  validate_pair(tp);
  Perm v(tp.n);
  for (size_t h = 0; h < tp.Jvec.size(); ++h) {
    Perm wj = longest_element(tp.n, tp.Jvec[h]);
    if ((v * wj).length() != v.length() + wj.length()) return false;
    v = v * wj * longest_element(tp.n, tp.Ivec[h + 1]);
  }
  return true;
}

namespace detail {

// One relative product step X *_K kl_longest(J) for X in H . kl_longest(K),
// K a subset of J. Coefficients are read off the longest members of the right
// K-cosets; the absorption precondition is verified by reconstruction.
inline HeckeElt star_step(const HeckeElt& X, const std::set<int>& K, const std::set<int>& J) {
  std::vector<std::pair<Perm, Laurent>> tops;
  for (const auto& [r, c] : X.terms()) {
    Perm z = perm_from_rank(X.n(), r);
    bool top = true;
    for (int k : K)
      if (!z.right_descent(k)) top = false;
    if (top) tops.emplace_back(coset_min_rep(z, K), c);
  }
  HeckeElt recon(X.n());
  for (const auto& [u, c] : tops) recon += basis_times_kl_longest(u, K).scaled(c);
  if (!(recon == X))
    throw std::domain_error("relative product undefined: factor not right-absorbed");
  HeckeElt out(X.n());
  for (const auto& [u, c] : tops) out += basis_times_kl_longest(u, J).scaled(c);
  return out;
}

}  // namespace detail

// Character of the generalized Bott-Samelson object attached to the pair: the
// iterated relative product of the kl_longest factors of Jvec over the inner
// entries of Ivec.
inline HeckeElt bs_character(const TranslationPair& tp) {
  validate_pair(tp);
  if (!tp.Ivec.front().empty()) throw std::invalid_argument("pair must start from the empty set");
  HeckeElt X = kl_longest(tp.n, tp.Jvec.front());
  for (size_t h = 1; h < tp.Jvec.size(); ++h)
    X = detail::star_step(X, tp.Ivec[h], tp.Jvec[h]);
  return X;
}

struct SmallResolutionReport {
  long paths = 0;
  long orders = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

inline SmallResolutionReport verify_small_resolution(int n, int i, size_t cap = 50) {
  Grassmannian ctx(n, i);
  auto h = parabolic_h_table(ctx);
  std::set<int> I = grassmannian_parabolic(n, i);
  SmallResolutionReport rep;
  for (size_t b = 0; b < ctx.size(); ++b) {
    const Path& lam = ctx.paths[b];
    ++rep.paths;
    HeckeElt ref = kl_lift(ctx, h, static_cast<int>(b), I);
    Perm target = perm_of_path(lam);
    for (const auto& order : neat_orders(lam, cap)) {
      ++rep.orders;
      std::ostringstream tag;
      tag << lam.steps << " order";
      for (int pk : order) tag << ' ' << pk;
      try {
        TranslationPair tp = translation_pair(lam, order);
        if (!is_reduced(tp)) rep.failures.push_back(tag.str() + ": pair not reduced");
        if (!(end_point(tp) == target))
          rep.failures.push_back(tag.str() + ": end-point mismatch");
        if (pair_length(tp) != static_cast<int>(length(lam)))
          rep.failures.push_back(tag.str() + ": length mismatch");
        if (!(bs_character(tp) == ref))
          rep.failures.push_back(tag.str() + ": character differs from KL element");
      } catch (const std::exception& e) {
        rep.failures.push_back(tag.str() + ": " + e.what());
      }
    }
  }
  return rep;
}

}  // namespace dyckgrass
