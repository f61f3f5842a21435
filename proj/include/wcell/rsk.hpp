#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wcell/permutation.hpp"
#include "wcell/tableau.hpp"

namespace wcell {

namespace detail {

// Display rows (row r holds boxes (r, 1), (r, 2), ...) to a normal tableau.
inline StandardTableau from_rows(const std::vector<std::vector<int>>& rows, int offset) {
  std::vector<int> outer(rows.empty() ? 0 : rows[0].size(), 0);
  int n = 0;
  for (const auto& r : rows) {
    n += static_cast<int>(r.size());
    for (std::size_t c = 0; c < r.size(); ++c) ++outer[c];
  }
  std::vector<Box> pos(n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      pos.at(rows[r][c] - offset - 1) = Box{static_cast<int>(r) + 1, static_cast<int>(c) + 1};
  return StandardTableau(SkewShape(Partition(outer)), offset, std::move(pos));
}

inline std::vector<std::vector<int>> to_rows(const StandardTableau& t) {
  std::vector<std::vector<int>> rows(t.shape().outer().part(1));
  for (int j = 1; j <= t.shape().outer().length(); ++j)
    for (int i = 1; i <= t.shape().outer().part(j); ++i) rows[i - 1].push_back(t.at({i, j}));
  return rows;
}

}  // namespace detail

struct RSPair {
  StandardTableau p;  // insertion tableau
  StandardTableau q;  // recording tableau
};

// Row insertion of a sequence of distinct integers forming an interval
// [a+1, a+n]; P carries offset a, Q records positions 1..n.
inline RSPair rs_insert(const std::vector<int>& seq) {
  if (seq.empty()) return {StandardTableau(SkewShape(Partition{}), 0, {}), StandardTableau(SkewShape(Partition{}), 0, {})};
  int lo = *std::min_element(seq.begin(), seq.end());
  std::vector<std::vector<int>> p, q;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    int x = seq[k];
    std::size_t r = 0;
    for (;; ++r) {
      if (r == p.size()) {
        p.push_back({x});
        q.push_back({static_cast<int>(k) + 1});
        break;
      }
      auto it = std::upper_bound(p[r].begin(), p[r].end(), x);
      if (it == p[r].end()) {
        p[r].push_back(x);
        q[r].push_back(static_cast<int>(k) + 1);
        break;
      }
      std::swap(x, *it);
    }
  }
  return {detail::from_rows(p, lo - 1), detail::from_rows(q, 0)};
}

inline RSPair rs(const Permutation& w) { return rs_insert(w.one_line()); }

inline Permutation rs_inverse(const StandardTableau& p, const StandardTableau& q) {
  if (!(p.shape() == q.shape()) || !p.shape().is_normal() || p.offset() != 0 || q.offset() != 0)
    throw std::invalid_argument("P and Q must be normal tableaux of one shape");
  auto prow = detail::to_rows(p);
  auto qrow = detail::to_rows(q);
  const int n = p.size();
  std::vector<int> w(n);
  for (int k = n; k >= 1; --k) {
    std::size_t r = 0;
    while (qrow[r].empty() || qrow[r].back() != k) ++r;
    qrow[r].pop_back();
    int x = prow[r].back();
    prow[r].pop_back();
    while (r-- > 0) {
      auto it = std::lower_bound(prow[r].begin(), prow[r].end(), x);
      --it;
      std::swap(x, *it);
    }
    w[k - 1] = x;
    while (!prow.empty() && prow.back().empty()) {
      prow.pop_back();
      qrow.pop_back();
    }
  }
  return Permutation(std::move(w));
}

struct SlideRecord {
  Box start;
  std::vector<Box> path;  // successive positions of the hole, from start to vacated
  Box vacated;
  StandardTableau result;
};

// Slide the empty inner corner c outwards; the smaller of the entries below
// and to the right moves into the hole.
inline SlideRecord jdt_slide(const StandardTableau& t, Box c) {
  const SkewShape& shape = t.shape();
  const auto corners = shape.inner_corners();
  if (std::find(corners.begin(), corners.end(), c) == corners.end())
    throw std::invalid_argument("slide box is not an inner corner");
  std::vector<Box> pos = t.positions();
  std::vector<Box> path{c};
  Box hole = c;
  for (;;) {
    Box below{hole.row + 1, hole.col}, right{hole.row, hole.col + 1};
    int vb = shape.contains(below) ? t.at(below) : 0;
    int vr = shape.contains(right) ? t.at(right) : 0;
    if (!vb && !vr) break;
    bool down = vb && (!vr || vb < vr);
    Box from = down ? below : right;
    pos[(down ? vb : vr) - t.offset() - 1] = hole;
    hole = from;
    path.push_back(hole);
  }
  Partition outer = shape.outer().remove_box(hole);
  Partition inner = shape.inner().remove_box(c);
  return {c, std::move(path), hole, StandardTableau(SkewShape(outer, inner), t.offset(), std::move(pos))};
}

// Repeated slides into the inner corner of largest column.
inline StandardTableau rectify(const StandardTableau& t) {
  StandardTableau cur = t;
  while (!cur.shape().is_normal()) cur = jdt_slide(cur, cur.shape().inner_corners().back()).result;
  return cur;
}

}  // namespace wcell
