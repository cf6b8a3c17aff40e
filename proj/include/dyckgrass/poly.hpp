#pragma once

#include "permutation.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dyckgrass {

using Rat = boost::multiprecision::cpp_rational;

// Polynomial in x_1..x_n with exact rational coefficients, keyed by exponent
// vector. The grading gives each variable degree 2.
class MPoly {
 public:
  explicit MPoly(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("need at least one variable");
  }

  static MPoly constant(int n, const Rat& a) {
    MPoly f(n);
    f.add_term(std::vector<int>(n, 0), a);
    return f;
  }
  static MPoly variable(int n, int j) {
    if (j < 1 || j > n) throw std::out_of_range("variable index");
    MPoly f(n);
    std::vector<int> e(n, 0);
    e[j - 1] = 1;
    f.add_term(e, 1);
    return f;
  }

  int n() const { return n_; }
  bool is_zero() const { return c_.empty(); }
  const std::map<std::vector<int>, Rat>& terms() const { return c_; }

  Rat coeff(const std::vector<int>& e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Rat(0) : it->second;
  }

  void add_term(const std::vector<int>& e, const Rat& a) {
    if (a == 0) return;
    if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent vector size");
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_[e] = a;
    } else {
      it->second += a;
      if (it->second == 0) c_.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& o) {
    check(o);
    for (const auto& [e, a] : o.c_) add_term(e, a);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    check(o);
    for (const auto& [e, a] : o.c_) add_term(e, -a);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  MPoly operator-() const {
    MPoly f(n_);
    for (const auto& [e, a] : c_) f.c_[e] = -a;
    return f;
  }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check(b);
    MPoly f(a.n_);
    for (const auto& [e1, c1] : a.c_)
      for (const auto& [e2, c2] : b.c_) {
        std::vector<int> e = e1;
        for (int k = 0; k < a.n_; ++k) e[k] += e2[k];
        f.add_term(e, c1 * c2);
      }
    return f;
  }

  MPoly scaled(const Rat& a) const {
    MPoly f(n_);
    if (a == 0) return f;
    for (const auto& [e, c] : c_) f.c_[e] = c * a;
    return f;
  }

  MPoly pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    MPoly f = constant(n_, 1);
    for (int t = 0; t < k; ++t) f = f * (*this);
    return f;
  }

  bool operator==(const MPoly& o) const { return n_ == o.n_ && c_ == o.c_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  // Graded degree (each variable counts 2); -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, a] : c_) {
      int s = 0;
      for (int k : e) s += k;
      d = std::max(d, 2 * s);
    }
    return d;
  }

  bool is_homogeneous() const {
    int d = -2;
    for (const auto& [e, a] : c_) {
      int s = 0;
      for (int k : e) s += k;
      if (d == -2) d = s;
      if (s != d) return false;
    }
    return true;
  }

  bool is_constant() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == std::vector<int>(n_, 0));
  }
  Rat value() const {
    if (!is_constant()) throw std::domain_error("polynomial is not constant");
    return is_zero() ? Rat(0) : c_.begin()->second;
  }

  // Variable substitution x_j -> x_{w(j)}.
  MPoly apply_perm(const Perm& w) const {
    if (w.n() != n_) throw std::invalid_argument("permutation size mismatch");
    MPoly f(n_);
    for (const auto& [e, a] : c_) {
      std::vector<int> e2(n_, 0);
      for (int j = 1; j <= n_; ++j) e2[w(j) - 1] = e[j - 1];
      f.add_term(e2, a);
    }
    return f;
  }

  // Substitution x_a -> x_b; the result vanishes exactly when x_a - x_b divides.
  MPoly substitute_equal(int a, int b) const {
    MPoly f(n_);
    for (const auto& [e, c] : c_) {
      std::vector<int> e2 = e;
      e2[b - 1] += e2[a - 1];
      e2[a - 1] = 0;
      f.add_term(e2, c);
    }
    return f;
  }

 private:
  void check(const MPoly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("mixed variable counts");
  }
  int n_;
  std::map<std::vector<int>, Rat> c_;
};

inline MPoly simple_root(int n, int j) {
  return MPoly::variable(n, j) - MPoly::variable(n, j + 1);
}

inline MPoly transposition_root(int n, int a, int b) {
  if (a >= b) throw std::invalid_argument("need a < b");
  return MPoly::variable(n, a) - MPoly::variable(n, b);
}

}  // namespace dyckgrass
