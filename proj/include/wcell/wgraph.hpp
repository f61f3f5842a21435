#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wcell/dual_knuth.hpp"
#include "wcell/generator_set.hpp"
#include "wcell/tableau.hpp"

namespace wcell {

struct VertexLabel {
  int molecule = 0;
  StandardTableau tableau;
  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

// mu(from, to) = w.
struct MuEntry {
  int from = 0;
  int to = 0;
  long long w = 0;
  friend bool operator==(const MuEntry&, const MuEntry&) = default;
};

// Arc tail -> head carries mu(head, tail).
struct Arc {
  int tail = 0;
  int head = 0;
  long long w = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// (V, mu, tau) over the generators s_1..s_{n-1}. Immutable once built.
class SColoredGraph {
 public:
  SColoredGraph() = default;
  SColoredGraph(int n, std::vector<GeneratorSet> tau, std::vector<MuEntry> mu = {},
                std::vector<std::optional<VertexLabel>> labels = {})
      : n_(n), tau_(std::move(tau)), labels_(std::move(labels)) {
    const int nv = num_vertices();
    if (labels_.empty()) labels_.resize(nv);
    if (static_cast<int>(labels_.size()) != nv) throw std::invalid_argument("label count mismatch");
    GeneratorSet all(n >= 1 ? ((std::uint64_t{1} << n) - 2) : 0);
    for (GeneratorSet t : tau_)
      if (!t.subset_of(all)) throw std::invalid_argument("tau outside {1..n-1}");
    for (const MuEntry& e : mu) {
      if (e.from < 0 || e.to < 0 || e.from >= nv || e.to >= nv) throw std::invalid_argument("mu vertex out of range");
      if (e.from == e.to) throw std::invalid_argument("self weight");
      if (e.w != 0) rows_.push_back(e);
    }
    std::sort(rows_.begin(), rows_.end(),
              [](const MuEntry& a, const MuEntry& b) { return std::pair(a.from, a.to) < std::pair(b.from, b.to); });
    for (std::size_t k = 1; k < rows_.size(); ++k)
      if (rows_[k].from == rows_[k - 1].from && rows_[k].to == rows_[k - 1].to)
        throw std::invalid_argument("duplicate mu entry");
    cols_ = rows_;
    std::sort(cols_.begin(), cols_.end(),
              [](const MuEntry& a, const MuEntry& b) { return std::pair(a.to, a.from) < std::pair(b.to, b.from); });
    row_start_.assign(nv + 1, 0);
    col_start_.assign(nv + 1, 0);
    for (const MuEntry& e : rows_) {
      ++row_start_[e.from + 1];
      ++col_start_[e.to + 1];
    }
    for (int v = 0; v < nv; ++v) {
      row_start_[v + 1] += row_start_[v];
      col_start_[v + 1] += col_start_[v];
    }
  }

  int n() const { return n_; }
  int num_vertices() const { return static_cast<int>(tau_.size()); }
  GeneratorSet tau(int v) const { return tau_.at(v); }
  const std::vector<GeneratorSet>& taus() const { return tau_; }
  const std::optional<VertexLabel>& label(int v) const { return labels_.at(v); }
  const std::vector<std::optional<VertexLabel>>& labels() const { return labels_; }

  // Nonzero entries sorted by (from, to).
  std::span<const MuEntry> entries() const { return rows_; }
  // Entries mu(u, .) for fixed u.
  std::span<const MuEntry> row(int u) const {
    return std::span<const MuEntry>(rows_).subspan(row_start_[u], row_start_[u + 1] - row_start_[u]);
  }
  // Entries mu(., v) for fixed v, sorted by from.
  std::span<const MuEntry> column(int v) const {
    return std::span<const MuEntry>(cols_).subspan(col_start_[v], col_start_[v + 1] - col_start_[v]);
  }

  long long mu(int u, int v) const {
    auto c = column(v);
    auto it = std::lower_bound(c.begin(), c.end(), u, [](const MuEntry& e, int x) { return e.from < x; });
    return it != c.end() && it->from == u ? it->w : 0;
  }

  bool is_arc(int tail, int head) const { return !tau(head).subset_of(tau(tail)) && mu(head, tail) != 0; }

 private:
  int n_ = 0;
  std::vector<GeneratorSet> tau_;
  std::vector<std::optional<VertexLabel>> labels_;
  std::vector<MuEntry> rows_, cols_;
  std::vector<int> row_start_, col_start_;
};

// Arcs out of v: mu(u, v) != 0 and tau(u) not inside tau(v).
inline std::vector<Arc> arcs_from(const SColoredGraph& g, int v) {
  std::vector<Arc> out;
  for (const MuEntry& e : g.column(v))
    if (!g.tau(e.from).subset_of(g.tau(v))) out.push_back({v, e.from, e.w});
  return out;
}

inline std::vector<Arc> arcs(const SColoredGraph& g) {
  std::vector<Arc> out;
  for (int v = 0; v < g.num_vertices(); ++v)
    for (const Arc& a : arcs_from(g, v)) out.push_back(a);
  return out;
}

// Unordered pairs {u,v}, u < v, with both arcs present.
inline std::vector<std::pair<int, int>> edges(const SColoredGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const MuEntry& e : g.entries())
    if (e.from < e.to && g.is_arc(e.to, e.from) && g.is_arc(e.from, e.to)) out.emplace_back(e.from, e.to);
  return out;
}

inline std::vector<std::pair<int, int>> simple_edges(const SColoredGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : edges(g))
    if (g.mu(u, v) == 1 && g.mu(v, u) == 1) out.emplace_back(u, v);
  return out;
}

struct CellDecomposition {
  std::vector<std::vector<int>> blocks;     // each sorted; blocks ordered by least vertex
  std::vector<int> block_of;
  std::vector<std::vector<int>> arcs_out;  // condensation: block a has an arc into block b

  // C <= C' iff some vertex of C is reachable from some vertex of C'.
  bool leq(int c, int c_prime) const {
    std::vector<char> seen(blocks.size(), 0);
    std::deque<int> queue{c_prime};
    seen[c_prime] = 1;
    while (!queue.empty()) {
      int b = queue.front();
      queue.pop_front();
      if (b == c) return true;
      for (int nb : arcs_out[b])
        if (!seen[nb]) {
          seen[nb] = 1;
          queue.push_back(nb);
        }
    }
    return false;
  }
};

// Strongly connected components of the arc digraph (iterative Tarjan).
inline CellDecomposition cells(const SColoredGraph& g) {
  const int nv = g.num_vertices();
  std::vector<std::vector<int>> adj(nv);
  for (int v = 0; v < nv; ++v)
    for (const Arc& a : arcs_from(g, v)) adj[v].push_back(a.head);

  std::vector<int> index(nv, -1), low(nv, 0), comp(nv, -1), stack;
  std::vector<char> on_stack(nv, 0);
  int counter = 0, ncomp = 0;
  std::vector<std::pair<int, std::size_t>> call;
  for (int root = 0; root < nv; ++root) {
    if (index[root] >= 0) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < adj[v].size()) {
        int w = adj[v][next++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        for (;;) {
          int w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = ncomp;
          if (w == v) break;
        }
        ++ncomp;
      }
      int done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }

  // Renumber components by least vertex.
  std::vector<int> relabel(ncomp, -1);
  int next_id = 0;
  for (int v = 0; v < nv; ++v)
    if (relabel[comp[v]] < 0) relabel[comp[v]] = next_id++;
  CellDecomposition cd;
  cd.blocks.resize(ncomp);
  cd.block_of.resize(nv);
  cd.arcs_out.resize(ncomp);
  for (int v = 0; v < nv; ++v) {
    cd.block_of[v] = relabel[comp[v]];
    cd.blocks[cd.block_of[v]].push_back(v);
  }
  for (int v = 0; v < nv; ++v)
    for (int w : adj[v])
      if (cd.block_of[v] != cd.block_of[w]) cd.arcs_out[cd.block_of[v]].push_back(cd.block_of[w]);
  for (auto& out : cd.arcs_out) {
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return cd;
}

// Connected components under simple edges, ordered by least vertex.
inline std::vector<std::vector<int>> simple_parts(const SColoredGraph& g) {
  const int nv = g.num_vertices();
  std::vector<std::vector<int>> adj(nv);
  for (auto [u, v] : simple_edges(g)) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> comp(nv, -1);
  std::vector<std::vector<int>> parts;
  for (int s = 0; s < nv; ++s) {
    if (comp[s] >= 0) continue;
    parts.emplace_back();
    std::deque<int> queue{s};
    comp[s] = static_cast<int>(parts.size()) - 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      parts.back().push_back(v);
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = comp[s];
          queue.push_back(w);
        }
    }
    std::sort(parts.back().begin(), parts.back().end());
  }
  return parts;
}

struct MoleculeType {
  std::vector<int> part;
  std::optional<Partition> type;       // empty when no shape matches
  std::vector<StandardTableau> image;  // image[k] corresponds to part[k]
};

namespace detail {

// Descent-preserving isomorphism from the simple part onto the dual equivalence
// graph of STD(lambda), by backtracking from vertices coloured like tau_lambda.
inline std::optional<std::vector<int>> match_molecule(const SColoredGraph& g, const std::vector<int>& part,
                                                      const std::vector<std::vector<int>>& part_adj,
                                                      const std::vector<StandardTableau>& tabs) {
  const int m = static_cast<int>(part.size());
  if (static_cast<int>(tabs.size()) != m) return std::nullopt;
  std::vector<GeneratorSet> dt;
  std::vector<std::vector<int>> tab_adj(m);
  for (const auto& t : tabs) dt.push_back(descent_set(t));
  for (int a = 0; a < m; ++a)
    for (const DKMove& mv : dk_moves_out(tabs[a])) {
      int b = static_cast<int>(std::find(tabs.begin(), tabs.end(), mv.target) - tabs.begin());
      tab_adj[a].push_back(b);
      tab_adj[b].push_back(a);
    }
  std::size_t edges_part = 0, edges_tab = 0;
  for (int a = 0; a < m; ++a) {
    edges_part += part_adj[a].size();
    std::sort(tab_adj[a].begin(), tab_adj[a].end());
    tab_adj[a].erase(std::unique(tab_adj[a].begin(), tab_adj[a].end()), tab_adj[a].end());
    edges_tab += tab_adj[a].size();
  }
  if (edges_part != edges_tab) return std::nullopt;

  std::vector<int> fwd(m, -1), bwd(m, -1);
  std::vector<int> order;  // BFS order of part-local vertices
  {
    std::vector<char> seen(m, 0);
    std::deque<int> q{0};
    seen[0] = 1;
    while (!q.empty()) {
      int a = q.front();
      q.pop_front();
      order.push_back(a);
      for (int b : part_adj[a])
        if (!seen[b]) {
          seen[b] = 1;
          q.push_back(b);
        }
    }
  }
  auto consistent = [&](int a, int x) {
    if (g.tau(part[a]) != dt[x]) return false;
    for (int b : part_adj[a]) {
      if (fwd[b] < 0) continue;
      if (!std::binary_search(tab_adj[x].begin(), tab_adj[x].end(), fwd[b])) return false;
    }
    return true;
  };
  std::function<bool(int)> extend = [&](int pos) -> bool {
    if (pos == m) return true;
    int a = order[pos];
    std::vector<int> cands;
    int anchor = -1;
    for (int b : part_adj[a])
      if (fwd[b] >= 0) {
        anchor = fwd[b];
        break;
      }
    if (anchor >= 0) cands = tab_adj[anchor];
    else
      for (int x = 0; x < m; ++x) cands.push_back(x);
    for (int x : cands) {
      if (bwd[x] >= 0 || !consistent(a, x)) continue;
      fwd[a] = x;
      bwd[x] = a;
      if (extend(pos + 1)) return true;
      fwd[a] = -1;
      bwd[x] = -1;
    }
    return false;
  };
  // The root is matched to a tableau with the colour of tau_lambda, tried in turn.
  if (!extend(0)) return std::nullopt;
  return fwd;
}

}  // namespace detail

// Types each simple part by a shape lambda whose dual equivalence graph it matches.
inline std::vector<MoleculeType> molecule_types(const SColoredGraph& g) {
  std::vector<MoleculeType> out;
  const int nv = g.num_vertices();
  std::vector<int> local(nv, -1);
  auto parts = simple_parts(g);
  std::vector<std::vector<int>> adj(nv);
  for (auto [u, v] : simple_edges(g)) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (const auto& part : parts) {
    MoleculeType mt{part, std::nullopt, {}};
    for (std::size_t k = 0; k < part.size(); ++k) local[part[k]] = static_cast<int>(k);
    std::vector<std::vector<int>> part_adj(part.size());
    for (std::size_t k = 0; k < part.size(); ++k)
      for (int w : adj[part[k]]) part_adj[k].push_back(local[w]);
    // Root the search at a vertex coloured like some tau_lambda.
    for (const Partition& lambda : partitions_of(g.n())) {
      if (count_std(lambda) != part.size()) continue;
      auto tabs = enumerate_std(lambda);
      GeneratorSet root_colour = descent_set(tabs.front());
      int root = -1;
      for (std::size_t k = 0; k < part.size(); ++k)
        if (g.tau(part[k]) == root_colour) {
          root = static_cast<int>(k);
          break;
        }
      if (root < 0) continue;
      // Reorder so the search starts at the root.
      std::vector<int> perm_part(part.size());
      for (std::size_t k = 0; k < part.size(); ++k) perm_part[k] = static_cast<int>(k);
      std::swap(perm_part[0], perm_part[root]);
      std::vector<int> reordered;
      for (int k : perm_part) reordered.push_back(part[k]);
      std::vector<int> pos_of(part.size());
      for (std::size_t k = 0; k < part.size(); ++k) pos_of[perm_part[k]] = static_cast<int>(k);
      std::vector<std::vector<int>> re_adj(part.size());
      for (std::size_t k = 0; k < part.size(); ++k)
        for (int w : part_adj[perm_part[k]]) re_adj[k].push_back(pos_of[w]);
      auto match = detail::match_molecule(g, reordered, re_adj, tabs);
      if (!match) continue;
      mt.type = lambda;
      mt.image.resize(part.size());
      for (std::size_t k = 0; k < part.size(); ++k) mt.image[perm_part[k]] = tabs[(*match)[k]];
      break;
    }
    out.push_back(std::move(mt));
  }
  return out;
}

// tau' = tau & J; mu'(u,v) = mu(u,v) when tau'(u) is not inside tau'(v).
inline SColoredGraph restrict_to(const SColoredGraph& g, GeneratorSet j) {
  std::vector<GeneratorSet> tau;
  for (GeneratorSet t : g.taus()) tau.push_back(t & j);
  std::vector<MuEntry> mu;
  for (const MuEntry& e : g.entries())
    if (!tau[e.from].subset_of(tau[e.to])) mu.push_back(e);
  return SColoredGraph(g.n(), std::move(tau), std::move(mu), g.labels());
}

// tau and mu agree under vertex map a -> bij[a].
inline bool graphs_equal_under(const SColoredGraph& a, const SColoredGraph& b, const std::vector<int>& bij) {
  const int nv = a.num_vertices();
  if (static_cast<int>(bij.size()) != nv || b.num_vertices() != nv) throw std::invalid_argument("not a bijection");
  std::vector<char> hit(nv, 0);
  for (int x : bij) {
    if (x < 0 || x >= nv || hit[x]) throw std::invalid_argument("not a bijection");
    hit[x] = 1;
  }
  if (a.n() != b.n()) return false;
  for (int v = 0; v < nv; ++v)
    if (a.tau(v) != b.tau(bij[v])) return false;
  if (a.entries().size() != b.entries().size()) return false;
  for (const MuEntry& e : a.entries())
    if (b.mu(bij[e.from], bij[e.to]) != e.w) return false;
  return true;
}

}  // namespace wcell
