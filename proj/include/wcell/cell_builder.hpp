#pragma once

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wcell/dual_knuth.hpp"
#include "wcell/tableau.hpp"
#include "wcell/wgraph.hpp"

namespace wcell {

// Nonzero mu(source, target) grouped by target; indices are lex positions in STD(lambda).
class MuTable {
 public:
  explicit MuTable(int size = 0) : cols_(size) {}

  int size() const { return static_cast<int>(cols_.size()); }
  const std::vector<std::pair<int, long long>>& column(int target) const { return cols_.at(target); }
  long long get(int source, int target) const {
    const auto& c = cols_.at(target);
    auto it = std::lower_bound(c.begin(), c.end(), std::pair<int, long long>(source, LLONG_MIN));
    return it != c.end() && it->first == source ? it->second : 0;
  }
  void set(int source, int target, long long w) {
    auto& c = cols_.at(target);
    auto it = std::lower_bound(c.begin(), c.end(), std::pair<int, long long>(source, LLONG_MIN));
    if (it != c.end() && it->first == source) {
      if (w) it->second = w;
      else c.erase(it);
    } else if (w) {
      c.insert(it, {source, w});
    }
  }
  std::size_t nonzero() const {
    std::size_t k = 0;
    for (const auto& c : cols_) k += c.size();
    return k;
  }

 private:
  std::vector<std::vector<std::pair<int, long long>>> cols_;
};

struct ProbablePair {
  int u = 0;
  int t = 0;
  friend bool operator==(const ProbablePair&, const ProbablePair&) = default;
};

// Builds Gamma_lambda on STD(lambda) column by column in lex order. Simple edges
// and covers are written first; probable pairs come from the polygon identities,
// reading only columns of lex-smaller targets.
class CellBuilder {
 public:
  explicit CellBuilder(Partition lambda)
      : lambda_(std::move(lambda)), tabs_(enumerate_std(lambda_)), table_(static_cast<int>(tabs_.size())) {
    for (std::size_t k = 0; k < tabs_.size(); ++k) {
      desc_.push_back(descent_set(tabs_[k]));
      index_.emplace(key(tabs_[k]), static_cast<int>(k));
    }
    seed();
  }

  const Partition& shape() const { return lambda_; }
  const std::vector<StandardTableau>& tableaux() const { return tabs_; }
  const MuTable& table() const { return table_; }
  int index_of(const StandardTableau& t) const {
    auto it = index_.find(key(t));
    if (it == index_.end()) throw std::invalid_argument("tableau not in STD(lambda)");
    return it->second;
  }

  bool is_probable(int u, int t) const {
    return desc_[t].proper_subset_of(desc_[u]) && u != t && tableau_dominance_leq(tabs_[u], tabs_[t]);
  }

  std::vector<ProbablePair> probable_pairs() const {
    std::vector<ProbablePair> out;
    for (int t = 0; t < size(); ++t)
      for (int u = 0; u < size(); ++u)
        if (is_probable(u, t)) out.push_back({u, t});
    return out;
  }

  // Fills every probable entry, target by target.
  void run() {
    for (int t = 0; t < size(); ++t) {
      for (int u = 0; u < size(); ++u) {
        if (!is_probable(u, t)) continue;
        if (long long m = mu_probable(u, t)) table_.set(u, t, m);
      }
    }
  }

  // mu(u,t) for a probable pair, through the canonical favourable representative.
  long long mu_probable(int u, int t) const {
    auto [u0, t0] = favourable_rep(tabs_[u], tabs_[t]);
    return mu_from_representative(u0, t0, t);
  }

  // The recursion evaluated at a favourable pair (u0, t0) standing for a probable
  // pair with target index `bound`; every column read must lie lex-below it.
  long long mu_from_representative(const StandardTableau& u0, const StandardTableau& t0, int bound) const {
    const int i = restriction_number(u0, t0);
    const int j = descent_data(t0).sd.max();
    if (!(i < j)) throw std::logic_error("restriction number not below max SD at " + pair_text(u0, t0));
    const int iu0 = index_of(u0);
    auto lookup = [&](int target) {
      if (target >= bound)
        throw std::logic_error("lookup of column " + std::to_string(target) + " not below target " +
                               std::to_string(bound) + " at " + pair_text(u0, t0));
      return table_.get(iu0, target);
    };
    auto column_of = [&](int target) -> const std::vector<std::pair<int, long long>>& {
      if (target >= bound)
        throw std::logic_error("column " + std::to_string(target) + " not below target " + std::to_string(bound));
      return table_.column(target);
    };
    long long acc = 0;
    if (j - i >= 2 || t0.col(j - 1) < t0.col(j + 1)) {
      const int h = j - i >= 2 ? i : j - 1;
      const int v = index_of(apply_s(j, t0));
      const int it0 = index_of(t0);
      for (auto [x, m] : column_of(v)) {
        int pat = pattern(desc_[x], h, j);
        if (pat == 1) acc += m * lookup(x);
        else if (pat == 2 && x != it0) acc -= m * lookup(x);
      }
    } else {
      if (t0.col(j - 1) == t0.col(j + 1)) throw std::logic_error("equal columns at " + pair_text(u0, t0));
      const StandardTableau vt = apply_s(j, t0);
      const int v = index_of(vt);
      const int w = index_of(apply_s(j - 1, vt));
      for (auto [y, m] : column_of(w)) {
        int pat = pattern(desc_[y], j - 1, j);
        if (pat == 2) acc += m * lookup(index_of(k_neighbour(tabs_[y], j - 1)));
        else if (pat == 1 && y != v) acc -= m * lookup(index_of(k_neighbour(tabs_[y], j - 1)));
      }
    }
    return acc;
  }

  SColoredGraph graph() const {
    std::vector<MuEntry> mu;
    for (int t = 0; t < size(); ++t)
      for (auto [u, w] : table_.column(t)) mu.push_back({u, t, w});
    std::vector<std::optional<VertexLabel>> labels;
    for (const auto& t : tabs_) labels.push_back(VertexLabel{0, t});
    return SColoredGraph(lambda_.size(), desc_, std::move(mu), std::move(labels));
  }

  int size() const { return static_cast<int>(tabs_.size()); }

 private:
  static std::string key(const StandardTableau& t) {
    std::string k;
    for (int e = t.first(); e <= t.last(); ++e) k.push_back(static_cast<char>(t.col(e)));
    return k;
  }
  static std::string pair_text(const StandardTableau& u, const StandardTableau& t) {
    return "(" + u.to_string() + ", " + t.to_string() + ")";
  }
  // 1 if D meets {a,b} in {a} only, 2 if in {b} only, else 0.
  static int pattern(GeneratorSet d, int a, int b) {
    bool x = d.contains(a), y = d.contains(b);
    return x && !y ? 1 : (!x && y ? 2 : 0);
  }

  void seed() {
    for (int t = 0; t < size(); ++t) {
      for (int k = 1; k < lambda_.size(); ++k) {
        auto x = try_apply_s(k, tabs_[t]);
        if (!x) continue;
        int xi = index_of(*x);
        if (dk_move_kind(tabs_[t], *x, k) || dk_move_kind(*x, tabs_[t], k)) {
          table_.set(xi, t, 1);
        } else if (desc_[t].proper_subset_of(desc_[xi]) && tableau_dominance_leq(tabs_[t], *x)) {
          table_.set(xi, t, 1);
        }
      }
    }
  }

  Partition lambda_;
  std::vector<StandardTableau> tabs_;
  std::vector<GeneratorSet> desc_;
  std::unordered_map<std::string, int> index_;
  MuTable table_;
};

inline SColoredGraph build_cell_graph(const Partition& lambda) {
  CellBuilder b(lambda);
  b.run();
  return b.graph();
}

}  // namespace wcell
