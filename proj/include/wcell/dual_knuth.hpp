#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wcell/tableau.hpp"

namespace wcell {

struct DKMove {
  StandardTableau source;
  StandardTableau target;  // s_index * source
  int kind = 0;            // 1 or 2
  int index = 0;
};

namespace detail {

// Pattern of D on the pair {a, a+1}: 1 if only a, 2 if only a+1, 0 otherwise.
inline int pair_pattern(GeneratorSet d, int a) {
  bool x = d.contains(a), y = d.contains(a + 1);
  return x && !y ? 1 : (!x && y ? 2 : 0);
}

inline bool in_range(const StandardTableau& t, int lo, int hi) { return t.holds(lo) && t.holds(hi); }

}  // namespace detail

// Kind of the move u -> t (1 or 2), or 0 if t = s_k u is not a dual Knuth move of index k.
inline int dk_move_kind(const StandardTableau& u, const StandardTableau& t, int k) {
  GeneratorSet du = descent_set(u), dt = descent_set(t);
  if (detail::in_range(u, k - 1, k + 1) && detail::pair_pattern(du, k - 1) == 1 &&
      detail::pair_pattern(dt, k - 1) == 2)
    return 1;
  if (detail::in_range(u, k, k + 2) && detail::pair_pattern(du, k) == 2 && detail::pair_pattern(dt, k) == 1)
    return 2;
  return 0;
}

// Every move out of t and every move into t.
inline std::vector<DKMove> dk_moves_from(const StandardTableau& t) {
  std::vector<DKMove> out;
  for (int k = t.first(); k < t.last(); ++k) {
    auto x = try_apply_s(k, t);
    if (!x) continue;
    if (int kind = dk_move_kind(t, *x, k)) out.push_back({t, *x, kind, k});
    if (int kind = dk_move_kind(*x, t, k)) out.push_back({*x, t, kind, k});
  }
  return out;
}

// Moves whose source is t.
inline std::vector<DKMove> dk_moves_out(const StandardTableau& t) {
  std::vector<DKMove> out;
  for (const DKMove& m : dk_moves_from(t))
    if (m.source == t) out.push_back(m);
  return out;
}

// Requires exactly one of k, k+1 in D(v).
inline StandardTableau k_neighbour(const StandardTableau& v, int k) {
  if (!detail::in_range(v, k, k + 2)) throw std::invalid_argument("k out of range");
  if (detail::pair_pattern(descent_set(v), k) == 0)
    throw std::invalid_argument("k-neighbour needs exactly one of k, k+1 in D");
  int a = v.col(k), b = v.col(k + 1), c = v.col(k + 2);
  if ((a < c && c <= b) || (b < c && c <= a)) return apply_s(k, v);
  if ((b <= a && a < c) || (c <= a && a < b)) return apply_s(k + 1, v);
  throw std::logic_error("k-neighbour: no case applies");
}

inline bool dual_equivalent(const StandardTableau& u, const StandardTableau& t) {
  if (!(u.shape() == t.shape()) || u.offset() != t.offset()) throw std::invalid_argument("shapes differ");
  std::vector<StandardTableau> seen{u};
  std::deque<StandardTableau> queue{u};
  while (!queue.empty()) {
    StandardTableau cur = queue.front();
    queue.pop_front();
    if (cur == t) return true;
    for (const DKMove& m : dk_moves_from(cur)) {
      const StandardTableau& nb = m.source == cur ? m.target : m.source;
      if (std::find(seen.begin(), seen.end(), nb) == seen.end()) {
        seen.push_back(nb);
        queue.push_back(nb);
      }
    }
  }
  return false;
}

// Largest k with restrict_leq(u,k) = restrict_leq(t,k); n when u = t.
inline int restriction_number(const StandardTableau& u, const StandardTableau& t) {
  if (u.size() != t.size() || u.offset() != 0 || t.offset() != 0)
    throw std::invalid_argument("tableaux must be normal of the same size");
  for (int k = 1; k <= u.size(); ++k)
    if (u.box(k) != t.box(k)) return k - 1;
  return u.size();
}

inline bool is_favourable(const StandardTableau& u, const StandardTableau& t) {
  int k = restriction_number(u, t);
  return (descent_set(u) ^ descent_set(t)).contains(k);
}

struct PairState {
  StandardTableau u, t;
  int k = 0;
  bool favourable = false;
};

inline PairState pair_state(const StandardTableau& u, const StandardTableau& t) {
  return {u, t, restriction_number(u, t), is_favourable(u, t)};
}

using TableauPair = std::pair<StandardTableau, StandardTableau>;

namespace detail {

// Removable boxes of xi = shape(u|<=k) lying between the boxes of k+1 in u and t.
inline std::vector<Box> between_boxes(const StandardTableau& u, const StandardTableau& t, int k) {
  Partition xi = shape_leq(u, k);
  Box bu = u.box(k + 1), bt = t.box(k + 1);
  int g = bu.row, p = bu.col, h = bt.row, q = bt.col;
  std::vector<Box> out;
  for (Box b : xi.removable_boxes()) {
    int d = b.row, m = b.col;
    if ((g > d && d >= h && p <= m && m < q) || (h > d && d >= g && q <= m && m < p)) out.push_back(b);
  }
  return out;
}

// w' on entries <= k followed by the entries above k of base.
inline StandardTableau splice(const StandardTableau& prefix, const StandardTableau& base, int k) {
  std::vector<Box> pos = prefix.positions();
  for (int e = k + 1; e <= base.size(); ++e) pos.push_back(base.box(e));
  return StandardTableau(base.shape(), 0, std::move(pos));
}

inline StandardTableau prefix_with_k_at(const StandardTableau& fill, Box b) {
  std::vector<Box> pos = fill.positions();
  pos.push_back(b);
  return StandardTableau(SkewShape(fill.shape().outer().add_box(b)), 0, std::move(pos));
}

inline void require_distinct(const StandardTableau& u, const StandardTableau& t) {
  if (u == t) throw std::invalid_argument("pair must consist of distinct tableaux");
}

}  // namespace detail

// F(u,t): entry k moved into a removable box between the two boxes of k+1,
// with any standard filling of the rest of shape(u|<=k).
inline std::vector<TableauPair> favourable_set(const StandardTableau& u, const StandardTableau& t) {
  detail::require_distinct(u, t);
  int k = restriction_number(u, t);
  Partition xi = shape_leq(u, k);
  std::vector<TableauPair> out;
  for (Box b : detail::between_boxes(u, t, k)) {
    for (const StandardTableau& fill : enumerate_std(xi.remove_box(b))) {
      StandardTableau w = detail::prefix_with_k_at(fill, b);
      out.emplace_back(detail::splice(w, u, k), detail::splice(w, t, k));
    }
  }
  return out;
}

// Between-box of least column, the rest filled minimally.
inline TableauPair favourable_rep(const StandardTableau& u, const StandardTableau& t) {
  detail::require_distinct(u, t);
  int k = restriction_number(u, t);
  auto boxes = detail::between_boxes(u, t, k);
  if (boxes.empty()) throw std::logic_error("favourable set is empty");
  Box b = boxes.front();
  StandardTableau w = detail::prefix_with_k_at(minimal_tableau(shape_leq(u, k).remove_box(b)), b);
  return {detail::splice(w, u, k), detail::splice(w, t, k)};
}

// A(u,t): members of F(u,t) with k in the column just left of the box of k+1 in t.
inline std::vector<TableauPair> approximates(const StandardTableau& u, const StandardTableau& t) {
  detail::require_distinct(u, t);
  int k = restriction_number(u, t);
  std::vector<TableauPair> out;
  for (auto& vx : favourable_set(u, t))
    if (vx.second.col(k) == t.col(k + 1) - 1) out.push_back(std::move(vx));
  return out;
}

namespace detail {

inline std::optional<TableauPair> extremal_approximate(const StandardTableau& u, const StandardTableau& t,
                                                       bool minimal) {
  detail::require_distinct(u, t);
  int k = restriction_number(u, t);
  for (Box b : between_boxes(u, t, k)) {
    if (b.col != t.col(k + 1) - 1) continue;
    Partition kappa = shape_leq(u, k).remove_box(b);
    StandardTableau fill = minimal ? minimal_tableau(kappa) : maximal_tableau(kappa);
    StandardTableau w = prefix_with_k_at(fill, b);
    return TableauPair{splice(w, u, k), splice(w, t, k)};
  }
  return std::nullopt;
}

}  // namespace detail

inline std::optional<TableauPair> minimal_approximate(const StandardTableau& u, const StandardTableau& t) {
  return detail::extremal_approximate(u, t, true);
}
inline std::optional<TableauPair> maximal_approximate(const StandardTableau& u, const StandardTableau& t) {
  return detail::extremal_approximate(u, t, false);
}

// A dual Knuth move of index at most m-1 with D(u) & [1,m-1] not inside D(t).
inline bool is_leq_m_move(const DKMove& mv, int m) {
  if (mv.index > m - 1) return false;
  GeneratorSet low(m >= 2 ? ((std::uint64_t{1} << m) - 2) : 0);
  return !((descent_set(mv.source) & low).subset_of(descent_set(mv.target)));
}

// Classes of STD(mu) x STD(lambda) under simultaneous (<= m)-moves of equal
// kind and index, largest first. Meant for small n.
inline std::vector<std::vector<TableauPair>> paired_classes(const Partition& mu, const Partition& lambda,
                                                            int m = -1) {
  if (mu.size() != lambda.size()) throw std::invalid_argument("partitions of different sizes");
  const int n = mu.size();
  if (m < 0) m = n;
  auto left = enumerate_std(mu), right = enumerate_std(lambda);
  const int nr = static_cast<int>(right.size());
  auto index_of = [](const std::vector<StandardTableau>& v, const StandardTableau& x) {
    return static_cast<int>(std::find(v.begin(), v.end(), x) - v.begin());
  };
  auto moves = [&](const StandardTableau& x) {
    std::vector<DKMove> out;
    for (DKMove& mv : dk_moves_from(x))
      if (is_leq_m_move(mv, m)) out.push_back(std::move(mv));
    return out;
  };
  std::vector<std::vector<DKMove>> lm, rm;
  for (auto& x : left) lm.push_back(moves(x));
  for (auto& x : right) rm.push_back(moves(x));

  std::vector<int> comp(left.size() * nr, -1);
  std::vector<std::vector<TableauPair>> classes;
  for (int start = 0; start < static_cast<int>(comp.size()); ++start) {
    if (comp[start] >= 0) continue;
    int id = static_cast<int>(classes.size());
    classes.emplace_back();
    std::deque<int> queue{start};
    comp[start] = id;
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      int a = cur / nr, b = cur % nr;
      classes[id].emplace_back(left[a], right[b]);
      for (const DKMove& x : lm[a]) {
        bool forward = x.source == left[a];
        for (const DKMove& y : rm[b]) {
          if (x.kind != y.kind || x.index != y.index || forward != (y.source == right[b])) continue;
          int na = index_of(left, forward ? x.target : x.source);
          int nb = index_of(right, forward ? y.target : y.source);
          int nxt = na * nr + nb;
          if (comp[nxt] < 0) {
            comp[nxt] = id;
            queue.push_back(nxt);
          }
        }
      }
    }
  }
  std::stable_sort(classes.begin(), classes.end(),
                   [](const auto& x, const auto& y) { return x.size() > y.size(); });
  return classes;
}

}  // namespace wcell
