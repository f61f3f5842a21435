#pragma once

#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wcell/tableau.hpp"
#include "wcell/wgraph.hpp"

namespace wcell {

struct Violation {
  std::string message;
  std::vector<int> vertices;
};

struct PolygonWitness {
  int u = 0, v = 0, i = 0, j = 0, r = 0;
  long long n_ij = 0, n_ji = 0;
};

struct CheckReport {
  std::string rule;
  std::vector<Violation> violations;  // at most max_kept
  std::size_t total = 0;
  std::optional<PolygonWitness> polygon;

  bool ok() const { return total == 0; }
  static constexpr std::size_t max_kept = 16;

  void add(std::string message, std::vector<int> vertices) {
    if (violations.size() < max_kept) violations.push_back({std::move(message), std::move(vertices)});
    ++total;
  }
};

namespace detail {

inline std::string set_text(GeneratorSet s) {
  std::string out = "{";
  for (int x : s.to_vector()) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

inline bool comparable(GeneratorSet a, GeneratorSet b) { return a.subset_of(b) || b.subset_of(a); }

}  // namespace detail

// Nonnegative weights, symmetric on incomparable colours, arc graph 2-colourable.
inline CheckReport check_admissible(const SColoredGraph& g) {
  CheckReport rep{"admissible", {}, 0, std::nullopt};
  for (const MuEntry& e : g.entries()) {
    if (e.w < 0)
      rep.add("negative weight mu(" + std::to_string(e.from) + "," + std::to_string(e.to) + ")=" + std::to_string(e.w),
              {e.from, e.to});
    if (!detail::comparable(g.tau(e.from), g.tau(e.to)) && g.mu(e.to, e.from) != e.w)
      rep.add("asymmetric weight between incomparable vertices", {e.from, e.to});
  }
  const int nv = g.num_vertices();
  std::vector<std::vector<int>> adj(nv);
  for (const Arc& a : arcs(g)) {
    adj[a.tail].push_back(a.head);
    adj[a.head].push_back(a.tail);
  }
  std::vector<int> colour(nv, -1);
  for (int s = 0; s < nv; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : adj[v]) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          rep.add("odd cycle through arc", {v, w});
        }
      }
    }
  }
  return rep;
}

// mu(u,v) != 0 forces every i in tau(u)\tau(v) and j in tau(v)\tau(u) to be bonded.
inline CheckReport check_compatibility(const SColoredGraph& g) {
  CheckReport rep{"compatibility", {}, 0, std::nullopt};
  for (const MuEntry& e : g.entries()) {
    GeneratorSet a = g.tau(e.from) - g.tau(e.to), b = g.tau(e.to) - g.tau(e.from);
    for (int i : a.to_vector())
      for (int j : b.to_vector())
        if (std::abs(i - j) != 1)
          rep.add("unbonded pair " + std::to_string(i) + "," + std::to_string(j), {e.from, e.to});
  }
  return rep;
}

inline CheckReport check_simplicity(const SColoredGraph& g) {
  CheckReport rep{"simplicity", {}, 0, std::nullopt};
  for (const MuEntry& e : g.entries()) {
    GeneratorSet tu = g.tau(e.from), tv = g.tau(e.to);
    long long back = g.mu(e.to, e.from);
    bool ok = (tv.proper_subset_of(tu) && back == 0) || (!detail::comparable(tu, tv) && e.w == 1 && back == 1);
    if (!ok)
      rep.add("mu(" + std::to_string(e.from) + "," + std::to_string(e.to) + ")=" + std::to_string(e.w) +
                  " with tau " + detail::set_text(tu) + " vs " + detail::set_text(tv),
              {e.from, e.to});
  }
  return rep;
}

// Simply-laced form: each u with i in tau(u), j not, has exactly one neighbour
// along an edge with j in tau, i not; for all bonded i, j.
inline CheckReport check_bonding(const SColoredGraph& g) {
  CheckReport rep{"bonding", {}, 0, std::nullopt};
  const int nv = g.num_vertices();
  std::vector<std::vector<int>> adj(nv);
  for (auto [u, v] : edges(g)) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (int i = 1; i < g.n(); ++i)
    for (int j : {i - 1, i + 1}) {
      if (j < 1 || j >= g.n()) continue;
      for (int u = 0; u < nv; ++u) {
        if (!g.tau(u).contains(i) || g.tau(u).contains(j)) continue;
        int count = 0;
        for (int v : adj[u]) count += g.tau(v).contains(j) && !g.tau(v).contains(i);
        if (count != 1)
          rep.add("vertex has " + std::to_string(count) + " partners for (" + std::to_string(i) + "," +
                      std::to_string(j) + ")",
                  {u});
      }
    }
  return rep;
}

// N^r_{i,j}(u, v) for all end vertices v, by propagating weights along the
// alternating pattern one step at a time.
inline std::map<int, long long> polygon_sums(const SColoredGraph& g, int u, int i, int j, int r) {
  std::map<int, long long> layer{{u, 1}};
  for (int step = 1; step <= r; ++step) {
    bool last = step == r;
    int want = step % 2 ? i : j, avoid = step % 2 ? j : i;
    std::map<int, long long> next;
    for (auto [x, wx] : layer)
      for (const MuEntry& e : g.column(x)) {
        GeneratorSet t = g.tau(e.from);
        bool fits = last ? (t.contains(i) && t.contains(j)) : (t.contains(want) && !t.contains(avoid));
        if (fits) next[e.from] += wx * e.w;
      }
    layer = std::move(next);
  }
  return layer;
}

// r = 2: all pairs i != j; r = 3: bonded pairs only.
inline CheckReport check_polygon(const SColoredGraph& g, int r) {
  CheckReport rep{"polygon" + std::to_string(r), {}, 0, std::nullopt};
  for (int i = 1; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j) {
      if (r == 3 && j != i + 1) continue;
      for (int u = 0; u < g.num_vertices(); ++u) {
        if (g.tau(u).contains(i) || g.tau(u).contains(j)) continue;
        auto a = polygon_sums(g, u, i, j, r);
        auto b = polygon_sums(g, u, j, i, r);
        auto report = [&](int v, long long x, long long y) {
          if (!rep.polygon) rep.polygon = PolygonWitness{u, v, i, j, r, x, y};
          rep.add("N^" + std::to_string(r) + " differs for (" + std::to_string(i) + "," + std::to_string(j) +
                      "): " + std::to_string(x) + " vs " + std::to_string(y),
                  {u, v});
        };
        for (auto [v, x] : a) {
          auto it = b.find(v);
          long long y = it == b.end() ? 0 : it->second;
          if (x != y) report(v, x, y);
        }
        for (auto [v, y] : b)
          if (!a.count(v) && y != 0) report(v, 0, y);
      }
    }
  return rep;
}

// Every nonzero mu(c_{b,u}, c_{a,t}) points down extended dominance, or is a
// cover u = s_i t > t inside one molecule.
inline CheckReport check_ordered(const SColoredGraph& g) {
  CheckReport rep{"ordered", {}, 0, std::nullopt};
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!g.label(v)) {
      rep.add("unlabelled vertex", {v});
      return rep;
    }
  for (const MuEntry& e : g.entries()) {
    const VertexLabel& lu = *g.label(e.from);
    const VertexLabel& lt = *g.label(e.to);
    const StandardTableau &u = lu.tableau, &t = lt.tableau;
    bool below = extended_dominance_leq(u, t) && !(u == t);
    bool cover = false;
    if (!below && lu.molecule == lt.molecule && u.shape() == t.shape()) {
      for (int i = 1; i < t.size() && !cover; ++i) {
        auto st = try_apply_s(i, t);
        cover = st && *st == u && tableau_dominance_leq(t, u);
      }
    }
    if (!below && !cover) rep.add("weight not ordered: " + u.to_string() + " vs " + t.to_string(), {e.from, e.to});
  }
  return rep;
}

inline std::vector<CheckReport> check_all_rules(const SColoredGraph& g) {
  return {check_admissible(g), check_compatibility(g), check_simplicity(g), check_bonding(g),
          check_polygon(g, 2), check_polygon(g, 3)};
}

}  // namespace wcell
