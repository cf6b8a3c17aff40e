#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace dyckgrass {

using Int = boost::multiprecision::cpp_int;

// Sparse Laurent polynomial in v with arbitrary-precision integer coefficients.
// Invariant: no zero coefficient is ever stored.
class Laurent {
public:
  Laurent() = default;
  Laurent(long c) {
    if (c != 0) c_[0] = c;
  }
  Laurent(const Int& c) {
    if (c != 0) c_[0] = c;
  }

  static Laurent monomial(Int coeff, int exp) {
    Laurent r;
    if (coeff != 0) r.c_[exp] = std::move(coeff);
    return r;
  }
  static Laurent v(int exp = 1) { return monomial(1, exp); }

  bool is_zero() const { return c_.empty(); }
  Int coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Int(0) : it->second;
  }
  int min_exp() const {
    if (c_.empty()) throw std::domain_error("min_exp of zero polynomial");
    return c_.begin()->first;
  }
  int max_exp() const {
    if (c_.empty()) throw std::domain_error("max_exp of zero polynomial");
    return c_.rbegin()->first;
  }
  const std::map<int, Int>& terms() const { return c_; }

  bool operator==(const Laurent& o) const { return c_ == o.c_; }
  bool operator!=(const Laurent& o) const { return c_ != o.c_; }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) add_term(e, -c);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  Laurent operator-() const {
    Laurent r;
    for (const auto& [e, c] : c_) r.c_[e] = -c;
    return r;
  }

  Laurent operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [e1, c1] : c_)
      for (const auto& [e2, c2] : o.c_) r.add_term(e1 + e2, c1 * c2);
    return r;
  }
  Laurent times_monomial(const Int& coeff, int exp) const {
    Laurent r;
    if (coeff == 0) return r;
    for (const auto& [e, c] : c_) r.c_[e + exp] = c * coeff;
    return r;
  }

  void add_term(int exp, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = c_.try_emplace(exp, coeff);
    if (!fresh) {
      it->second += coeff;
      if (it->second == 0) c_.erase(it);
    }
  }

  // Exact quotient this/d, or nullopt when the division leaves a remainder.
  // An exact Laurent quotient has no exponent below min_exp()-d.min_exp(),
  // which bounds the long division.
  std::optional<Laurent> divide_exact(const Laurent& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return Laurent{};
    const int low = min_exp() - d.min_exp();
    const int dmax = d.max_exp();
    const Int dlead = d.c_.rbegin()->second;
    Laurent rem = *this;
    Laurent quot;
    while (!rem.is_zero()) {
      int qe = rem.max_exp() - dmax;
      if (qe < low) return std::nullopt;
      Int lead = rem.c_.rbegin()->second;
      if (lead % dlead != 0) return std::nullopt;
      Int q = lead / dlead;
      quot.add_term(qe, q);
      rem -= d.times_monomial(q, qe);
    }
    return quot;
  }

  // Normal form with descending exponents, e.g. "v^4+2v^2+1", "v^3+2v+2v^-1+v^-3".
  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      const auto& [e, c] = *it;
      bool neg = c < 0;
      Int mag = neg ? Int(-c) : c;
      if (s.empty()) {
        if (neg) s += "-";
      } else {
        s += neg ? "-" : "+";
      }
      if (mag != 1 || e == 0) s += mag.str();
      if (e != 0) {
        s += "v";
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

private:
  std::map<int, Int> c_;
};

}  // namespace dyckgrass
