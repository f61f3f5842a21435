#pragma once

#include <map>
#include <string>

namespace wcell {

// Element of Z[q, q^{-1}]; zero coefficients are never stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(long long c) {  // NOLINT: integers embed as constants
    if (c) terms_[0] = c;
  }
  static LaurentPolynomial monomial(int e, long long c = 1) {
    LaurentPolynomial p;
    if (c) p.terms_[e] = c;
    return p;
  }
  static LaurentPolynomial q() { return monomial(1); }
  static LaurentPolynomial q_inv() { return monomial(-1); }

  const std::map<int, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long coefficient(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }
  int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  int min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }

  LaurentPolynomial bar() const {
    LaurentPolynomial r;
    for (auto [e, c] : terms_) r.terms_[-e] = c;
    return r;
  }
  // q^k * p
  LaurentPolynomial shifted(int k) const {
    LaurentPolynomial r;
    for (auto [e, c] : terms_) r.terms_[e + k] = c;
    return r;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (auto [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (auto [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  void add_term(int e, long long c) {
    if (!c) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh && (it->second += c) == 0) terms_.erase(it);
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a) { return LaurentPolynomial() - a; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (auto [e1, c1] : a.terms_)
      for (auto [e2, c2] : b.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
  }
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      auto [e, c] = *it;
      long long a = c < 0 ? -c : c;
      if (s.empty()) s += c < 0 ? "-" : "";
      else s += c < 0 ? " - " : " + ";
      if (e == 0) {
        s += std::to_string(a);
        continue;
      }
      if (a != 1) s += std::to_string(a) + "*";
      s += "q";
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  std::map<int, long long> terms_;
};

}  // namespace wcell
