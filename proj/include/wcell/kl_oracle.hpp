#pragma once

#include <cstdint>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wcell/laurent.hpp"
#include "wcell/permutation.hpp"
#include "wcell/rsk.hpp"
#include "wcell/tableau.hpp"
#include "wcell/wgraph.hpp"

namespace wcell {

// Largest n the oracle accepts: WCELL_ORACLE_MAX if set, else 6.
inline int oracle_bound() {
  if (const char* env = std::getenv("WCELL_ORACLE_MAX")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 6;
}

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Kazhdan-Lusztig polynomials P_{y,w}(q) of S_n, q = the classical parameter.
class KLTable {
 public:
  explicit KLTable(int n) : n_(n), elements_(all_permutations(n)) {
    const int N = size();
    length_.resize(N);
    left_desc_.resize(N);
    smul_.assign(n_, std::vector<int>(N));
    for (int x = 0; x < N; ++x) {
      length_[x] = elements_[x].length();
      left_desc_[x] = elements_[x].left_descents();
      for (int s = 1; s < n_; ++s) smul_[s][x] = static_cast<int>(lex_rank(apply_s(s, elements_[x])));
    }
    std::vector<int> by_length(N);
    for (int x = 0; x < N; ++x) by_length[x] = x;
    std::stable_sort(by_length.begin(), by_length.end(), [&](int a, int b) { return length_[a] < length_[b]; });

    pool_.push_back({});   // zero
    pool_.push_back({1});  // one
    cell_.assign(static_cast<std::size_t>(N) * N, 0);
    mu_lists_.resize(N);
    for (int w : by_length) {
      if (length_[w] == 0) {
        set(w, w, 1);
        continue;
      }
      int s = left_desc_[w].min();
      int v = smul_[s][w];
      std::vector<std::pair<int, long long>> zs;
      for (auto [z, m] : mu_lists_[v])
        if (left_desc_[z].contains(s)) zs.push_back({z, m});
      for (int x = 0; x < N; ++x) {
        if (!bruhat_leq(elements_[x], elements_[w])) continue;
        int sx = smul_[s][x];
        int c = left_desc_[x].contains(s) ? 1 : 0;
        std::vector<long long> p;
        add_shifted(p, poly(sx, v), 1 - c, 1);
        add_shifted(p, poly(x, v), c, 1);
        for (auto [z, m] : zs) add_shifted(p, poly(x, z), (length_[w] - length_[z]) / 2, -m);
        while (!p.empty() && p.back() == 0) p.pop_back();
        set(x, w, intern(p));
      }
      for (int z = 0; z < N; ++z) {
        int d = length_[w] - length_[z];
        if (z == w || d <= 0 || d % 2 == 0) continue;
        const auto& p = poly(z, w);
        std::size_t e = static_cast<std::size_t>((d - 1) / 2);
        if (p.size() > e && p[e] != 0) mu_lists_[w].push_back({z, p[e]});
      }
    }
  }

  int n() const { return n_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const Permutation& element(int x) const { return elements_[x]; }
  int index(const Permutation& w) const { return static_cast<int>(lex_rank(w)); }
  int length(int x) const { return length_[x]; }

  // Coefficients of P_{y,w} in increasing degree; empty when y is not below w.
  const std::vector<long long>& poly(int y, int w) const {
    return pool_[cell_[static_cast<std::size_t>(y) * size() + w]];
  }
  LaurentPolynomial P(const Permutation& y, const Permutation& w) const {
    LaurentPolynomial r;
    const auto& p = poly(index(y), index(w));
    for (std::size_t e = 0; e < p.size(); ++e) r.add_term(static_cast<int>(e), p[e]);
    return r;
  }
  // Coefficient of q^{(l(w)-l(y)-1)/2} in P_{y,w}, zero unless y < w.
  long long mu(int y, int w) const {
    int d = length_[w] - length_[y];
    if (d <= 0 || d % 2 == 0) return 0;
    const auto& p = poly(y, w);
    std::size_t e = static_cast<std::size_t>((d - 1) / 2);
    return p.size() > e ? p[e] : 0;
  }
  // mu on unordered pairs: mu(y,w) if y < w, mu(w,y) if w < y.
  long long mu_sym(int y, int w) const {
    if (length_[y] < length_[w]) return mu(y, w);
    if (length_[w] < length_[y]) return mu(w, y);
    return 0;
  }

 private:
  static void add_shifted(std::vector<long long>& acc, const std::vector<long long>& p, int shift, long long c) {
    if (p.empty() || c == 0) return;
    if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
    for (std::size_t e = 0; e < p.size(); ++e) acc[e + shift] += c * p[e];
  }
  std::uint32_t intern(const std::vector<long long>& p) {
    auto [it, fresh] = ids_.try_emplace(p, static_cast<std::uint32_t>(pool_.size()));
    if (fresh) pool_.push_back(p);
    return it->second;
  }
  void set(int y, int w, std::uint32_t id) { cell_[static_cast<std::size_t>(y) * size() + w] = id; }

  int n_;
  std::vector<Permutation> elements_;
  std::vector<int> length_;
  std::vector<GeneratorSet> left_desc_;
  std::vector<std::vector<int>> smul_;
  std::vector<std::vector<long long>> pool_;
  std::map<std::vector<long long>, std::uint32_t> ids_{{{}, 0}, {{1}, 1}};
  std::vector<std::uint32_t> cell_;
  std::vector<std::vector<std::pair<int, long long>>> mu_lists_;
};

inline KLTable kl_polynomials(int n, int bound = oracle_bound()) {
  if (n > bound) throw BoundExceeded("n=" + std::to_string(n) + " exceeds the oracle bound " + std::to_string(bound));
  return KLTable(n);
}

namespace detail {

// tau = L(w); mu symmetrised, kept only where tau(y) is not inside tau(w).
inline SColoredGraph kl_graph_on(const KLTable& kl, const std::vector<Permutation>& ws,
                                 std::vector<std::optional<VertexLabel>> labels) {
  std::vector<GeneratorSet> tau;
  std::vector<int> idx;
  for (const auto& w : ws) {
    tau.push_back(w.left_descents());
    idx.push_back(kl.index(w));
  }
  std::vector<MuEntry> mu;
  const int nv = static_cast<int>(ws.size());
  for (int a = 0; a < nv; ++a)
    for (int b = 0; b < nv; ++b) {
      if (a == b || tau[a].subset_of(tau[b])) continue;
      if (long long m = kl.mu_sym(idx[a], idx[b])) mu.push_back({a, b, m});
    }
  return SColoredGraph(kl.n(), std::move(tau), std::move(mu), std::move(labels));
}

}  // namespace detail

// Left cell {word(t) : t in STD(lambda)}; vertex k is word of the k-th tableau in lex order.
inline SColoredGraph kl_left_cell_graph(const KLTable& kl, const Partition& lambda) {
  if (lambda.size() != kl.n()) throw std::invalid_argument("partition size differs from table rank");
  std::vector<Permutation> ws;
  std::vector<std::optional<VertexLabel>> labels;
  for (const auto& t : enumerate_std(lambda)) {
    ws.push_back(word(t));
    labels.push_back(VertexLabel{0, t});
  }
  return detail::kl_graph_on(kl, ws, std::move(labels));
}

inline SColoredGraph kl_left_cell_graph(const Partition& lambda, int bound = oracle_bound()) {
  return kl_left_cell_graph(kl_polynomials(lambda.size(), bound), lambda);
}

// All of S_n; vertex x labelled (index of the recording tableau, insertion tableau).
inline SColoredGraph kl_regular_graph(const KLTable& kl) {
  std::vector<Permutation> ws;
  std::vector<std::optional<VertexLabel>> labels;
  std::vector<StandardTableau> qs;
  for (int x = 0; x < kl.size(); ++x) {
    const Permutation& w = kl.element(x);
    RSPair pq = rs(w);
    auto it = std::find(qs.begin(), qs.end(), pq.q);
    int mol = static_cast<int>(it - qs.begin());
    if (it == qs.end()) qs.push_back(pq.q);
    ws.push_back(w);
    labels.push_back(VertexLabel{mol, pq.p});
  }
  return detail::kl_graph_on(kl, ws, std::move(labels));
}

}  // namespace wcell
