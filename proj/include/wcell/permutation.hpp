#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wcell/generator_set.hpp"

namespace wcell {

// Permutation of {1..n} in one-line notation: w(i) = one_line()[i-1].
// Products act on the left: (x*y)(i) = x(y(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    std::vector<char> seen(w_.size() + 1, 0);
    for (int v : w_) {
      if (v < 1 || v > size() || seen[v]) throw std::invalid_argument("not a permutation");
      seen[v] = 1;
    }
  }
  Permutation(std::initializer_list<int> one_line) : Permutation(std::vector<int>(one_line)) {}

  static Permutation identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  // "2,1,3"
  static Permutation parse(const std::string& text) {
    std::vector<int> w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument("bad entry '" + item + "'");
      w.push_back(v);
    }
    return Permutation(std::move(w));
  }

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }
  const std::vector<int>& one_line() const { return w_; }

  Permutation inverse() const {
    std::vector<int> inv(w_.size());
    for (int i = 0; i < size(); ++i) inv[w_[i] - 1] = i + 1;
    return Permutation(std::move(inv));
  }

  int length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j) inv += w_[i] > w_[j];
    return inv;
  }

  // s_i in L(w) iff l(s_i w) < l(w) iff i+1 occurs before i.
  GeneratorSet left_descents() const {
    std::vector<int> pos(w_.size() + 1);
    for (int i = 0; i < size(); ++i) pos[w_[i]] = i;
    GeneratorSet d;
    for (int i = 1; i < size(); ++i)
      if (pos[i] > pos[i + 1]) d.insert(i);
    return d;
  }
  GeneratorSet right_descents() const {
    GeneratorSet d;
    for (int i = 1; i < size(); ++i)
      if (w_[i - 1] > w_[i]) d.insert(i);
    return d;
  }

  std::string to_string() const {
    std::string s;
    for (int i = 0; i < size(); ++i) {
      if (i) s += ',';
      s += std::to_string(w_[i]);
    }
    return s;
  }

  friend Permutation operator*(const Permutation& x, const Permutation& y) {
    if (x.size() != y.size()) throw std::invalid_argument("size mismatch");
    std::vector<int> r(y.w_.size());
    for (int i = 0; i < y.size(); ++i) r[i] = x.w_[y.w_[i] - 1];
    return Permutation(std::move(r));
  }
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  friend Permutation apply_s(int i, const Permutation& w);
  friend Permutation right_apply_s(const Permutation& w, int i);
  std::vector<int> w_;
};

// s_i * w: swaps the values i and i+1.
inline Permutation apply_s(int i, const Permutation& w) {
  if (i < 1 || i >= w.size()) throw std::out_of_range("generator index out of range");
  Permutation r = w;
  for (int& v : r.w_) {
    if (v == i) v = i + 1;
    else if (v == i + 1) v = i;
  }
  return r;
}

// w * s_i: swaps the positions i and i+1.
inline Permutation right_apply_s(const Permutation& w, int i) {
  if (i < 1 || i >= w.size()) throw std::out_of_range("generator index out of range");
  Permutation r = w;
  std::swap(r.w_[i - 1], r.w_[i]);
  return r;
}

// Tableau criterion: x <= y iff sorted prefixes of x are entrywise below those of y.
inline bool bruhat_leq(const Permutation& x, const Permutation& y) {
  if (x.size() != y.size()) throw std::invalid_argument("size mismatch");
  const int n = x.size();
  std::vector<int> a, b;
  for (int k = 0; k < n - 1; ++k) {
    a.insert(std::upper_bound(a.begin(), a.end(), x(k + 1)), x(k + 1));
    b.insert(std::upper_bound(b.begin(), b.end(), y(k + 1)), y(k + 1));
    for (int i = 0; i <= k; ++i)
      if (a[i] > b[i]) return false;
  }
  return true;
}

// All of S_n in lexicographic order of one-line notation.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// Position in all_permutations(n).
inline std::int64_t lex_rank(const Permutation& w) {
  const int n = w.size();
  std::int64_t rank = 0;
  std::vector<int> avail(n);
  std::iota(avail.begin(), avail.end(), 1);
  for (int i = 1; i <= n; ++i) {
    auto it = std::find(avail.begin(), avail.end(), w(i));
    std::int64_t smaller = it - avail.begin();
    std::int64_t f = 1;
    for (int k = 2; k <= n - i; ++k) f *= k;
    rank += smaller * f;
    avail.erase(it);
  }
  return rank;
}

}  // namespace wcell
