#pragma once

#include "laurent.hpp"
#include "path.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace dyckgrass {

// A Dyck strip: boxes on consecutive columns tracing a Dyck path upside down,
// stored sorted by x. Both endpoints sit at the maximal height of the strip.
using DyckStrip = std::vector<Box>;

inline bool is_dyck_strip(const DyckStrip& s) {
  if (s.empty()) return false;
  int maxy = s.front().y;
  for (const Box& b : s) maxy = std::max(maxy, b.y);
  if (s.front().y != maxy || s.back().y != maxy) return false;
  for (size_t k = 1; k < s.size(); ++k) {
    if (s[k].x != s[k - 1].x + 1) return false;
    if (std::abs(s[k].y - s[k - 1].y) != 1) return false;
  }
  return true;
}

inline int strip_height(const DyckStrip& s) { return s.front().y; }
inline int strip_length(const DyckStrip& s) { return static_cast<int>(s.size()); }

// Strips listed in increasing order of their first box.
using DyckPartition = std::vector<DyckStrip>;

inline int partition_size(const DyckPartition& p) { return static_cast<int>(p.size()); }

inline bool strip_addable(const Path& p, const DyckStrip& d) {
  if (!is_dyck_strip(d)) return false;
  int x0 = d.front().x, x1 = d.back().x;
  if (x0 < 1 || x1 > p.n - 1) return false;
  if (p.steps[x0 - 1] != 'D' || p.steps[x1] != 'U') return false;
  auto h = heights(p);
  for (const Box& b : d)
    if (b.y != h[b.x] + 1) return false;
  return true;
}

inline Path add_strip(const Path& p, const DyckStrip& d) {
  if (!strip_addable(p, d)) throw std::invalid_argument("strip not addable to path");
  Path q = p;
  q.steps[d.front().x - 1] = 'U';
  q.steps[d.back().x] = 'D';
  return q;
}

inline std::vector<DyckStrip> removable_strips(const Path& p) {
  std::vector<DyckStrip> out;
  auto h = heights(p);
  for (int x0 = 1; x0 <= p.n - 1; ++x0) {
    if (p.steps[x0 - 1] != 'U') continue;
    int maxh = h[x0];
    for (int x1 = x0; x1 <= p.n - 1; ++x1) {
      maxh = std::max(maxh, h[x1]);
      if (h[x0] != maxh || h[x1] != maxh) continue;
      if (p.steps[x1] != 'D') continue;
      DyckStrip d;
      for (int x = x0; x <= x1; ++x) d.push_back({x, h[x] - 1});
      out.push_back(std::move(d));
    }
  }
  return out;
}

inline Path remove_strip(const Path& p, const DyckStrip& d) {
  Path q = p;
  q.steps[d.front().x - 1] = 'D';
  q.steps[d.back().x] = 'U';
  Path r(q.n, q.i, q.steps);
  if (!strip_addable(r, d)) throw std::invalid_argument("strip not removable from path");
  return r;
}

namespace detail {

// Shared scratch for partition enumeration over one region (at most 64 boxes).
struct RegionScan {
  std::vector<Box> boxes;                    // sorted
  std::map<Box, int> index;
  explicit RegionScan(const Region& r) : boxes(r.boxes) {
    if (boxes.size() > 64) throw std::length_error("region too large");
    for (size_t k = 0; k < boxes.size(); ++k) index[boxes[k]] = static_cast<int>(k);
  }
  int find(const Box& b) const {
    auto it = index.find(b);
    return it == index.end() ? -1 : it->second;
  }
};

// All strips inside `free` whose first (lex-least) box is boxes[least]: the
// strip starts at its own maximal height, so it only ever steps right and
// never climbs above the start.
inline void strips_from(const RegionScan& rs, std::uint64_t free, int least,
                        DyckStrip& cur, std::vector<DyckStrip>& out) {
  const Box last = cur.back();
  if (last.y == cur.front().y) out.push_back(cur);
  for (int dy : {-1, +1}) {
    Box nxt{last.x + 1, last.y + dy};
    if (nxt.y > cur.front().y) continue;
    int idx = rs.find(nxt);
    if (idx < 0 || !(free >> idx & 1) || idx < least) continue;
    cur.push_back(nxt);
    strips_from(rs, free, least, cur, out);
    cur.pop_back();
  }
}

inline void enumerate_rec(const RegionScan& rs, std::uint64_t free, DyckPartition& cur,
                          const std::function<void(const DyckPartition&)>& emit) {
  if (free == 0) {
    emit(cur);
    return;
  }
  int least = 0;
  while (!(free >> least & 1)) ++least;
  DyckStrip seed{rs.boxes[least]};
  std::vector<DyckStrip> options;
  strips_from(rs, free, least, seed, options);
  for (const DyckStrip& s : options) {
    std::uint64_t used = 0;
    for (const Box& b : s) used |= std::uint64_t(1) << rs.index.at(b);
    cur.push_back(s);
    enumerate_rec(rs, free & ~used, cur, emit);
    cur.pop_back();
  }
}

}  // namespace detail

inline void for_each_partition(const Path& lower, const Path& upper,
                               const std::function<void(const DyckPartition&)>& emit) {
  Region r = region_boxes(lower, upper);
  detail::RegionScan rs(r);
  std::uint64_t free = r.boxes.size() == 64 ? ~std::uint64_t(0)
                                            : (std::uint64_t(1) << r.boxes.size()) - 1;
  DyckPartition cur;
  detail::enumerate_rec(rs, free, cur, emit);
}

inline std::vector<DyckPartition> enumerate_partitions(const Path& lower, const Path& upper) {
  std::vector<DyckPartition> out;
  for_each_partition(lower, upper, [&](const DyckPartition& p) { out.push_back(p); });
  return out;
}

namespace detail {

struct StripLookup {
  std::map<Box, int> owner;
  explicit StripLookup(const DyckPartition& p) {
    for (size_t k = 0; k < p.size(); ++k)
      for (const Box& b : p[k]) owner[b] = static_cast<int>(k);
  }
  int find(const Box& b) const {
    auto it = owner.find(b);
    return it == owner.end() ? -1 : it->second;
  }
};

}  // namespace detail

// Type 1: whenever any box just above a box of D is covered, a single strip D'
// contains every box just above a box of D (plane boxes outside the region are
// covered by nothing, so they break the condition).
inline bool is_type1(const DyckPartition& p) {
  detail::StripLookup look(p);
  for (const DyckStrip& d : p) {
    int dprime = -1;
    bool any = false;
    for (const Box& b : d) {
      int o = look.find({b.x, b.y + 2});
      if (o >= 0) {
        any = true;
        dprime = o;
      }
    }
    if (!any) continue;
    for (const Box& b : d) {
      int o = look.find({b.x, b.y + 2});
      if (o != dprime) return false;
    }
  }
  return true;
}

// Type 2: whenever some other strip D' covers a box just below, SW, or SE of a
// box of D, every such box lies in D or that same D'.
inline bool is_type2(const DyckPartition& p) {
  detail::StripLookup look(p);
  for (size_t k = 0; k < p.size(); ++k) {
    const DyckStrip& d = p[k];
    auto neighbors = [&](const Box& b) {
      return std::array<Box, 3>{Box{b.x, b.y - 2}, Box{b.x - 1, b.y - 1}, Box{b.x + 1, b.y - 1}};
    };
    int dprime = -1;
    for (const Box& b : d)
      for (const Box& nb : neighbors(b)) {
        int o = look.find(nb);
        if (o >= 0 && o != static_cast<int>(k)) dprime = o;
      }
    if (dprime < 0) continue;
    for (const Box& b : d)
      for (const Box& nb : neighbors(b)) {
        int o = look.find(nb);
        if (o != static_cast<int>(k) && o != dprime) return false;
      }
  }
  return true;
}

// One pass over all partitions of A(lower,upper), accumulating both counting
// polynomials and the number of type-2 partitions.
struct DyckCounts {
  Laurent q1, q2;
  int type2_count = 0;
  long partitions = 0;
};

inline DyckCounts dyck_counts(const Path& lower, const Path& upper) {
  DyckCounts c;
  if (!bruhat_leq(lower, upper)) return c;
  for_each_partition(lower, upper, [&](const DyckPartition& p) {
    ++c.partitions;
    if (is_type1(p)) c.q1 += Laurent::v(partition_size(p));
    if (is_type2(p)) {
      c.q2 += Laurent::v(partition_size(p));
      ++c.type2_count;
    }
  });
  return c;
}

inline Laurent q1(const Path& lower, const Path& upper) { return dyck_counts(lower, upper).q1; }
inline Laurent q2(const Path& lower, const Path& upper) { return dyck_counts(lower, upper).q2; }

// An ordering of a partition's strips, as indices into the strip list.
struct StripOrdering {
  DyckPartition partition;
  std::vector<int> order;
};

inline bool is_admissible(const StripOrdering& o, const Path& base) {
  if (o.order.size() != o.partition.size()) return false;
  std::vector<char> seen(o.partition.size(), 0);
  Path cur = base;
  for (int k : o.order) {
    if (k < 0 || k >= partition_size(o.partition) || seen[k]) return false;
    seen[k] = 1;
    if (!strip_addable(cur, o.partition[k])) return false;
    cur = add_strip(cur, o.partition[k]);
  }
  return true;
}

namespace detail {

inline void admissible_rec(const DyckPartition& p, const Path& cur, std::vector<char>& used,
                           std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (prefix.size() == p.size()) {
    out.push_back(prefix);
    return;
  }
  for (size_t k = 0; k < p.size(); ++k) {
    if (used[k] || !strip_addable(cur, p[k])) continue;
    used[k] = 1;
    prefix.push_back(static_cast<int>(k));
    admissible_rec(p, add_strip(cur, p[k]), used, prefix, out);
    prefix.pop_back();
    used[k] = 0;
  }
}

}  // namespace detail

inline std::vector<std::vector<int>> admissible_orders(const DyckPartition& p, const Path& base) {
  std::vector<std::vector<int>> out;
  std::vector<char> used(p.size(), 0);
  std::vector<int> prefix;
  detail::admissible_rec(p, base, used, prefix, out);
  return out;
}

// Stable sort of the ordering by ascending strip height (the o_hgt normal form).
inline StripOrdering height_sort(const StripOrdering& o) {
  StripOrdering r = o;
  std::stable_sort(r.order.begin(), r.order.end(), [&](int a, int b) {
    return strip_height(r.partition[a]) < strip_height(r.partition[b]);
  });
  return r;
}

// P > Q in the partition order: P and Q agree above some height h, differ at h,
// and every height-h strip of P is contained in a height-h strip of Q.
inline bool partition_succ(const DyckPartition& p, const DyckPartition& q) {
  auto by_height = [](const DyckPartition& part) {
    std::map<int, std::vector<DyckStrip>> g;
    for (const DyckStrip& d : part) g[strip_height(d)].push_back(d);
    for (auto& [h, v] : g) std::sort(v.begin(), v.end());
    return g;
  };
  auto gp = by_height(p), gq = by_height(q);
  std::vector<int> hs;
  for (const auto& [h, v] : gp) hs.push_back(h);
  for (const auto& [h, v] : gq) hs.push_back(h);
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  int hdiff = 0;
  bool found = false;
  for (auto it = hs.rbegin(); it != hs.rend(); ++it) {
    auto ip = gp.find(*it), iq = gq.find(*it);
    bool eq = ip != gp.end() && iq != gq.end() && ip->second == iq->second;
    if (ip == gp.end() && iq == gq.end()) eq = true;
    if (!eq) {
      hdiff = *it;
      found = true;
      break;
    }
  }
  if (!found) return false;  // equal partitions
  auto ip = gp.find(hdiff), iq = gq.find(hdiff);
  if (ip == gp.end() || iq == gq.end()) return false;
  for (const DyckStrip& s : ip->second) {
    bool inside = false;
    for (const DyckStrip& t : iq->second)
      if (std::includes(t.begin(), t.end(), s.begin(), s.end())) inside = true;
    if (!inside) return false;
  }
  return true;
}

// Rewrites an overlying type-2 pair {C,D} (some box of C just below a box of D)
// into the unique type-1 pair of the same union: C' collects the boxes just
// below boxes of D, D' is the complement.
inline std::pair<DyckStrip, DyckStrip> overlying_rewrite(const DyckStrip& c, const DyckStrip& d) {
  if (!is_dyck_strip(c) || !is_dyck_strip(d)) throw std::invalid_argument("not strips");
  if (strip_height(c) < strip_height(d))
    throw std::domain_error("no rewrite: overlying strip is higher");
  std::vector<Box> all(c);
  all.insert(all.end(), d.begin(), d.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::invalid_argument("strips overlap");
  auto in_d = [&](const Box& b) { return std::binary_search(d.begin(), d.end(), b); };
  bool touching = false;
  for (const Box& b : c)
    if (in_d({b.x, b.y + 2})) touching = true;
  if (!touching) throw std::invalid_argument("no box of C just below a box of D");
  DyckStrip cp, dp;
  for (const Box& b : all) {
    if (in_d({b.x, b.y + 2}))
      cp.push_back(b);
    else
      dp.push_back(b);
  }
  return {cp, dp};
}

inline bool strips_distant(const DyckStrip& c, const DyckStrip& d) {
  std::vector<Box> all(c);
  all.insert(all.end(), d.begin(), d.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::invalid_argument("strips overlap");
  for (const Box& b : c) {
    if (std::binary_search(d.begin(), d.end(), Box{b.x, b.y + 2})) return false;
    if (std::binary_search(d.begin(), d.end(), Box{b.x, b.y - 2})) return false;
  }
  return true;
}

}  // namespace dyckgrass
