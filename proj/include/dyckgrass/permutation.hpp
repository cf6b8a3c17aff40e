#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace dyckgrass {

// Permutation of {1..n} in one-line notation; composition acts right-to-left:
// (a*b)(k) = a(b(k)).
class Perm {
public:
  explicit Perm(int n) : w_(n) {
    for (int k = 0; k < n; ++k) w_[k] = k + 1;
  }
  explicit Perm(std::vector<int> one_line) : w_(std::move(one_line)) {
    std::vector<bool> seen(w_.size(), false);
    for (int v : w_) {
      if (v < 1 || v > static_cast<int>(w_.size()) || seen[v - 1])
        throw std::invalid_argument("not a permutation");
      seen[v - 1] = true;
    }
  }

  static Perm transposition(int n, int a, int b) {
    Perm t(n);
    std::swap(t.w_[a - 1], t.w_[b - 1]);
    return t;
  }
  static Perm simple(int n, int j) { return transposition(n, j, j + 1); }

  int n() const { return static_cast<int>(w_.size()); }
  int operator()(int k) const { return w_[k - 1]; }
  const std::vector<int>& one_line() const { return w_; }

  bool operator==(const Perm& o) const { return w_ == o.w_; }
  bool operator!=(const Perm& o) const { return w_ != o.w_; }
  bool operator<(const Perm& o) const { return w_ < o.w_; }

  bool is_identity() const {
    for (int k = 0; k < n(); ++k)
      if (w_[k] != k + 1) return false;
    return true;
  }

  Perm inverse() const {
    std::vector<int> inv(w_.size());
    for (int k = 0; k < n(); ++k) inv[w_[k] - 1] = k + 1;
    return Perm(std::move(inv));
  }

  friend Perm operator*(const Perm& a, const Perm& b) {
    if (a.n() != b.n()) throw std::invalid_argument("size mismatch");
    std::vector<int> r(a.n());
    for (int k = 0; k < a.n(); ++k) r[k] = a.w_[b.w_[k] - 1];
    return Perm(std::move(r));
  }

  int length() const {
    int inv = 0;
    for (int a = 0; a < n(); ++a)
      for (int b = a + 1; b < n(); ++b)
        if (w_[a] > w_[b]) ++inv;
    return inv;
  }

  bool right_descent(int j) const { return w_[j - 1] > w_[j]; }

  // Reduced word whose left-to-right product of simple transpositions is *this.
  std::vector<int> reduced_word() const {
    std::vector<int> word;
    Perm x = *this;
    while (!x.is_identity()) {
      for (int j = 1; j < x.n(); ++j) {
        if (x.right_descent(j)) {
          std::swap(x.w_[j - 1], x.w_[j]);
          word.push_back(j);
          break;
        }
      }
    }
    std::reverse(word.begin(), word.end());
    return word;
  }

  static Perm from_word(int n, const std::vector<int>& word) {
    Perm x(n);
    for (int j : word) {
      if (j < 1 || j >= n) throw std::invalid_argument("bad simple label");
      std::swap(x.w_[j - 1], x.w_[j]);
    }
    return x;
  }

  // Full Bruhat order on S_n via the prefix-dominance criterion.
  bool bruhat_leq(const Perm& o) const {
    if (n() != o.n()) throw std::invalid_argument("size mismatch");
    std::vector<int> a, b;
    for (int p = 1; p <= n(); ++p) {
      a.push_back(w_[p - 1]);
      b.push_back(o.w_[p - 1]);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      for (size_t r = 0; r < a.size(); ++r)
        if (a[r] > b[r]) return false;
    }
    return true;
  }

  // Lexicographic rank among all n! permutations; dense table key for n <= 12.
  std::uint32_t rank() const {
    std::uint32_t r = 0;
    for (int a = 0; a < n(); ++a) {
      std::uint32_t smaller = 0;
      for (int b = a + 1; b < n(); ++b)
        if (w_[b] < w_[a]) ++smaller;
      r = r * (n() - a) + smaller;
    }
    return r;
  }

private:
  std::vector<int> w_;
};

inline std::uint32_t factorial(int n) {
  std::uint32_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

inline Perm perm_from_rank(int n, std::uint32_t rank) {
  std::vector<int> pool(n), w;
  for (int k = 0; k < n; ++k) pool[k] = k + 1;
  for (int a = n; a >= 1; --a) {
    std::uint32_t f = factorial(a - 1);
    std::uint32_t idx = rank / f;
    rank %= f;
    w.push_back(pool[idx]);
    pool.erase(pool.begin() + idx);
  }
  return Perm(std::move(w));
}

// Longest element of the parabolic subgroup W_J (J a set of simple labels):
// the product of order-reversals over the maximal consecutive runs of J.
inline Perm longest_element(int n, const std::set<int>& J) {
  std::vector<int> w(n);
  for (int k = 0; k < n; ++k) w[k] = k + 1;
  auto it = J.begin();
  while (it != J.end()) {
    int a = *it, b = a;
    auto run = std::next(it);
    while (run != J.end() && *run == b + 1) b = *run++;
    std::reverse(w.begin() + (a - 1), w.begin() + (b + 1));
    it = run;
  }
  return Perm(std::move(w));
}

inline int longest_length(int n, const std::set<int>& J) {
  return longest_element(n, J).length();
}

// All elements of W_J, found by closure under right multiplication by J.
inline std::vector<Perm> parabolic_elements(int n, const std::set<int>& J) {
  std::set<Perm> seen{Perm(n)};
  std::vector<Perm> queue{Perm(n)};
  for (size_t q = 0; q < queue.size(); ++q) {
    for (int j : J) {
      Perm next = queue[q] * Perm::simple(n, j);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return queue;
}

}  // namespace dyckgrass
