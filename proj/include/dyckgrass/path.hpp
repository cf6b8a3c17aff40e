#pragma once

#include "permutation.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dyckgrass {

// Lattice path from (0,i) to (n,n-i) with unit up/down steps: the element of
// Lambda_{n,i} encoding a minimal coset representative in S_n/(S_i x S_{n-i}).
struct Path {
  int n = 0;
  int i = 0;
  std::string steps;  // 'U' or 'D', one char per step, left to right

  Path() = default;
  Path(int n_, int i_, std::string steps_) : n(n_), i(i_), steps(std::move(steps_)) {
    if (n < 2 || i < 1 || i > n - 1) throw std::invalid_argument("bad (n,i)");
    if (static_cast<int>(steps.size()) != n) throw std::invalid_argument("bad step count");
    int downs = 0;
    for (char c : steps) {
      if (c != 'U' && c != 'D') throw std::invalid_argument("bad step symbol");
      if (c == 'D') ++downs;
    }
    if (downs != i) throw std::invalid_argument("wrong number of down steps");
  }

  bool operator==(const Path& o) const { return n == o.n && i == o.i && steps == o.steps; }
  bool operator!=(const Path& o) const { return !(*this == o); }
  bool operator<(const Path& o) const { return steps < o.steps; }
};

inline Path identity_path(int n, int i) {
  return Path(n, i, std::string(i, 'D') + std::string(n - i, 'U'));
}

inline Path top_path(int n, int i) {
  return Path(n, i, std::string(n - i, 'U') + std::string(i, 'D'));
}

inline Path flip_steps(const Path& p, int j) {
  Path q = p;
  std::swap(q.steps[j - 1], q.steps[j]);
  return q;
}

inline std::set<int> grassmannian_parabolic(int n, int i) {
  std::set<int> I;
  for (int j = 1; j <= n - 1; ++j)
    if (j != i) I.insert(I.end(), j);
  return I;
}

inline int height(const Path& p, int j) {
  if (j < 0 || j > p.n) throw std::out_of_range("height index");
  int h = p.i;
  for (int k = 0; k < j; ++k) h += p.steps[k] == 'U' ? 1 : -1;
  return h;
}

inline std::vector<int> heights(const Path& p) {
  std::vector<int> h(p.n + 1);
  h[0] = p.i;
  for (int k = 1; k <= p.n; ++k) h[k] = h[k - 1] + (p.steps[k - 1] == 'U' ? 1 : -1);
  return h;
}

inline int length(const Path& p) {
  int ups = 0, inv = 0;
  for (char c : p.steps) {
    if (c == 'U')
      ++ups;
    else
      inv += ups;
  }
  return inv;
}

inline bool bruhat_leq(const Path& a, const Path& b) {
  if (a.n != b.n || a.i != b.i) throw std::invalid_argument("mismatched (n,i)");
  int ha = a.i, hb = b.i;
  for (int k = 0; k < a.n; ++k) {
    ha += a.steps[k] == 'U' ? 1 : -1;
    hb += b.steps[k] == 'U' ? 1 : -1;
    if (ha > hb) return false;
  }
  return true;
}

enum class StepKind { Peak, Valley, SlopeUp, SlopeDown };

inline StepKind classify_position(const Path& p, int j) {
  if (j < 1 || j > p.n - 1) throw std::out_of_range("position");
  char a = p.steps[j - 1], b = p.steps[j];
  if (a == 'U' && b == 'D') return StepKind::Peak;
  if (a == 'D' && b == 'U') return StepKind::Valley;
  return a == 'U' ? StepKind::SlopeUp : StepKind::SlopeDown;
}

inline std::vector<int> peaks(const Path& p) {
  std::vector<int> r;
  for (int j = 1; j <= p.n - 1; ++j)
    if (classify_position(p, j) == StepKind::Peak) r.push_back(j);
  return r;
}

inline std::vector<int> valleys(const Path& p) {
  std::vector<int> r;
  for (int j = 1; j <= p.n - 1; ++j)
    if (classify_position(p, j) == StepKind::Valley) r.push_back(j);
  return r;
}

// S_lambda = {j : s_j lambda <= lambda in W/W_I} = peaks and slopes.
inline std::set<int> descent_set(const Path& p) {
  std::set<int> r;
  for (int j = 1; j <= p.n - 1; ++j)
    if (classify_position(p, j) != StepKind::Valley) r.insert(j);
  return r;
}

// 45-degree box centered at (x,y), x+y+i odd; its label is x.
struct Box {
  int x = 0;
  int y = 0;
  bool operator==(const Box& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Box& o) const { return !(*this == o); }
  bool operator<(const Box& o) const { return x != o.x ? x < o.x : y < o.y; }
};

struct Region {
  Path lower, upper;
  std::vector<Box> boxes;  // sorted by (x,y)
};

inline Region region_boxes(const Path& lower, const Path& upper) {
  if (!bruhat_leq(lower, upper)) throw std::invalid_argument("paths not comparable");
  Region r{lower, upper, {}};
  auto hl = heights(lower), hu = heights(upper);
  for (int x = 1; x <= lower.n - 1; ++x)
    for (int y = hl[x] + 1; y <= hu[x] - 1; y += 2) r.boxes.push_back({x, y});
  return r;
}

inline std::map<int, int> rex_counts(const Path& p) {
  std::map<int, int> r;
  Region a = region_boxes(identity_path(p.n, p.i), p);
  for (const Box& b : a.boxes) ++r[b.x];
  return r;
}

// Word of box labels from repeatedly removing the leftmost peak box;
// its left-to-right product of simple transpositions is perm_of_path.
inline std::vector<int> reduced_word(const Path& p) {
  std::vector<int> word;
  Path cur = p;
  for (;;) {
    auto pk = peaks(cur);
    if (pk.empty()) break;
    int j = pk.front();
    word.push_back(j);
    cur.steps[j - 1] = 'D';
    cur.steps[j] = 'U';
  }
  return word;
}

inline Perm perm_of_path(const Path& p) {
  std::vector<int> winv(p.n);
  int d = 0, u = 0;
  for (int k = 1; k <= p.n; ++k) {
    if (p.steps[k - 1] == 'D')
      winv[k - 1] = ++d;
    else
      winv[k - 1] = p.i + ++u;
  }
  return Perm(std::move(winv)).inverse();
}

inline bool in_minimal_coset_reps(const Perm& w, int i) {
  for (int k = 1; k < w.n(); ++k)
    if (k != i && w(k) > w(k + 1)) return false;
  return true;
}

inline Path path_of_perm(const Perm& w, int n, int i) {
  if (w.n() != n) throw std::invalid_argument("size mismatch");
  if (!in_minimal_coset_reps(w, i)) throw std::domain_error("permutation not in W^I");
  Perm winv = w.inverse();
  std::string s(n, 'U');
  for (int k = 1; k <= n; ++k)
    if (winv(k) <= i) s[k - 1] = 'D';
  return Path(n, i, std::move(s));
}

// Partition inside the i x (n-i) rectangle: for each down step, right to left,
// the number of up steps preceding it.
inline std::vector<int> young_shape(const Path& p) {
  std::vector<int> shape;
  int ups_before = 0;
  std::vector<int> at_down;
  for (char c : p.steps) {
    if (c == 'U')
      ++ups_before;
    else
      at_down.push_back(ups_before);
  }
  for (auto it = at_down.rbegin(); it != at_down.rend(); ++it)
    if (*it > 0) shape.push_back(*it);
  return shape;
}

inline std::vector<int> conjugate_shape(const std::vector<int>& shape) {
  std::vector<int> t;
  for (int col = 1; shape.size() && col <= shape[0]; ++col) {
    int cnt = 0;
    for (int part : shape)
      if (part >= col) ++cnt;
    t.push_back(cnt);
  }
  return t;
}

inline std::vector<Path> enumerate_paths(int n, int i) {
  if (n < 2 || i < 1 || i > n - 1) throw std::invalid_argument("bad (n,i)");
  std::vector<Path> out;
  std::string s(n, 'U');
  // choose positions of the i down steps
  std::vector<int> pos(i);
  for (int k = 0; k < i; ++k) pos[k] = k;
  for (;;) {
    std::string t(n, 'U');
    for (int k : pos) t[k] = 'D';
    out.emplace_back(n, i, t);
    int k = i - 1;
    while (k >= 0 && pos[k] == n - i + k) --k;
    if (k < 0) break;
    ++pos[k];
    for (int m = k + 1; m < i; ++m) pos[m] = pos[m - 1] + 1;
  }
  std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
    int la = length(a), lb = length(b);
    return la != lb ? la < lb : a.steps < b.steps;
  });
  return out;
}

// Shared immutable context for one Lambda_{n,i}: canonical path order
// (by length, then steps), index lookup, and a cached Bruhat matrix.
struct Grassmannian {
  int n, i;
  std::vector<Path> paths;
  std::map<std::string, int> index;
  std::vector<int> len;
  std::vector<std::vector<char>> leq_;

  Grassmannian(int n_, int i_) : n(n_), i(i_), paths(enumerate_paths(n_, i_)) {
    for (size_t k = 0; k < paths.size(); ++k) {
      index[paths[k].steps] = static_cast<int>(k);
      len.push_back(length(paths[k]));
    }
    leq_.assign(paths.size(), std::vector<char>(paths.size(), 0));
    for (size_t a = 0; a < paths.size(); ++a)
      for (size_t b = 0; b < paths.size(); ++b)
        leq_[a][b] = bruhat_leq(paths[a], paths[b]) ? 1 : 0;
  }

  std::size_t size() const { return paths.size(); }
  int idx(const Path& p) const {
    auto it = index.find(p.steps);
    if (it == index.end()) throw std::invalid_argument("path not in this Grassmannian");
    return it->second;
  }
  bool leq(int a, int b) const { return leq_[a][b] != 0; }
  int id_idx() const { return index.at(identity_path(n, i).steps); }
};

}  // namespace dyckgrass
