#pragma once

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "wcell/laurent.hpp"
#include "wcell/wgraph.hpp"
#include "wcell/wgraph_checks.hpp"

namespace wcell {

// Sparse square matrix stored by columns: cols[c] maps row -> entry.
struct GeneratorMatrix {
  int generator = 0;
  std::vector<std::map<int, LaurentPolynomial>> cols;

  int dim() const { return static_cast<int>(cols.size()); }
  LaurentPolynomial at(int r, int c) const {
    auto it = cols[c].find(r);
    return it == cols[c].end() ? LaurentPolynomial() : it->second;
  }
};

namespace detail {

inline GeneratorMatrix mat_mul(const GeneratorMatrix& a, const GeneratorMatrix& b) {
  GeneratorMatrix c{0, std::vector<std::map<int, LaurentPolynomial>>(b.dim())};
  for (int v = 0; v < b.dim(); ++v) {
    for (const auto& [k, bk] : b.cols[v])
      for (const auto& [r, ar] : a.cols[k]) c.cols[v][r] += ar * bk;
    std::erase_if(c.cols[v], [](const auto& kv) { return kv.second.is_zero(); });
  }
  return c;
}

inline GeneratorMatrix mat_affine(const GeneratorMatrix& a, const LaurentPolynomial& scale,
                                  const LaurentPolynomial& diag) {
  GeneratorMatrix c{0, std::vector<std::map<int, LaurentPolynomial>>(a.dim())};
  for (int v = 0; v < a.dim(); ++v) {
    for (const auto& [r, x] : a.cols[v]) c.cols[v][r] = scale * x;
    c.cols[v][v] += diag;
    std::erase_if(c.cols[v], [](const auto& kv) { return kv.second.is_zero(); });
  }
  return c;
}

// First differing entry, as (row, col), or (-1,-1).
inline std::pair<int, int> mat_diff(const GeneratorMatrix& a, const GeneratorMatrix& b) {
  for (int v = 0; v < a.dim(); ++v)
    if (a.cols[v] != b.cols[v]) {
      for (const auto& [r, x] : a.cols[v])
        if (b.at(r, v) != x) return {r, v};
      for (const auto& [r, x] : b.cols[v])
        if (a.at(r, v) != x) return {r, v};
    }
  return {-1, -1};
}

}  // namespace detail

// A_s e_v = -q^{-1} e_v if s in tau(v), else q e_v + sum over u with s in tau(u) of mu(u,v) e_u.
inline std::vector<GeneratorMatrix> module_matrices(const SColoredGraph& g) {
  std::vector<GeneratorMatrix> out;
  const int nv = g.num_vertices();
  for (int s = 1; s < g.n(); ++s) {
    GeneratorMatrix m{s, std::vector<std::map<int, LaurentPolynomial>>(nv)};
    for (int v = 0; v < nv; ++v) {
      if (g.tau(v).contains(s)) {
        m.cols[v][v] = LaurentPolynomial::monomial(-1, -1);
        continue;
      }
      m.cols[v][v] = LaurentPolynomial::q();
      for (const MuEntry& e : g.column(v))
        if (g.tau(e.from).contains(s)) m.cols[v][e.from] = LaurentPolynomial(e.w);
    }
    out.push_back(std::move(m));
  }
  return out;
}

// Quadratic, commuting and braid relations, exactly.
inline CheckReport verify_hecke_relations(const SColoredGraph& g) {
  CheckReport rep{"hecke", {}, 0, std::nullopt};
  auto mats = module_matrices(g);
  const LaurentPolynomial q_minus = LaurentPolynomial::q() - LaurentPolynomial::q_inv();
  auto note = [&](const std::string& what, std::pair<int, int> at) {
    rep.add(what + " fails at entry (" + std::to_string(at.first) + "," + std::to_string(at.second) + ")",
            {at.first, at.second});
  };
  for (const auto& a : mats) {
    auto lhs = detail::mat_mul(a, a);
    auto rhs = detail::mat_affine(a, q_minus, LaurentPolynomial(1));
    auto d = detail::mat_diff(lhs, rhs);
    if (d.first >= 0) note("quadratic relation for s" + std::to_string(a.generator), d);
  }
  for (std::size_t x = 0; x < mats.size(); ++x)
    for (std::size_t y = x + 1; y < mats.size(); ++y) {
      const auto &a = mats[x], &b = mats[y];
      std::string name = "s" + std::to_string(a.generator) + ",s" + std::to_string(b.generator);
      if (std::abs(a.generator - b.generator) >= 2) {
        auto d = detail::mat_diff(detail::mat_mul(a, b), detail::mat_mul(b, a));
        if (d.first >= 0) note("commutation " + name, d);
      } else {
        auto ab = detail::mat_mul(a, b), ba = detail::mat_mul(b, a);
        auto d = detail::mat_diff(detail::mat_mul(ab, a), detail::mat_mul(ba, b));
        if (d.first >= 0) note("braid relation " + name, d);
      }
    }
  return rep;
}

}  // namespace wcell
