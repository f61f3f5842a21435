#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wcell/generator_set.hpp"
#include "wcell/partition.hpp"
#include "wcell/permutation.hpp"

namespace wcell {

struct DescentData {
  GeneratorSet sa;  // row(i) > row(i+1)
  GeneratorSet sd;  // col(i) > col(i+1)
  GeneratorSet wa;  // same row
  GeneratorSet wd;  // same column
  GeneratorSet d() const { return sd | wd; }
  friend bool operator==(const DescentData&, const DescentData&) = default;
};

// Standard filling of a skew shape by offset+1, ..., offset+n, increasing down
// columns and along rows.
class StandardTableau {
 public:
  StandardTableau() = default;

  StandardTableau(SkewShape shape, int offset, std::vector<Box> positions)
      : shape_(std::move(shape)), offset_(offset), pos_(std::move(positions)) {
    if (static_cast<int>(pos_.size()) != shape_.size())
      throw std::invalid_argument("entry count does not match shape");
    if (offset_ < 0) throw std::invalid_argument("negative offset");
    fill_grid();
    for (Box b : shape_.boxes()) {
      int v = at(b);
      if (v == 0) throw std::invalid_argument("box left empty");
      Box below{b.row + 1, b.col}, right{b.row, b.col + 1};
      if (shape_.contains(below) && at(below) < v) throw std::invalid_argument("columns must increase");
      if (shape_.contains(right) && at(right) < v) throw std::invalid_argument("rows must increase");
    }
  }

  // Each column is filled top to bottom in increasing order, so the column of
  // every entry determines the tableau.
  static StandardTableau from_columns(const SkewShape& shape, int offset, const std::vector<int>& cols) {
    std::vector<int> next(shape.outer().length() + 2, 0);
    for (int j = 1; j <= shape.outer().length(); ++j) next[j] = shape.inner().part(j) + 1;
    std::vector<Box> pos;
    pos.reserve(cols.size());
    for (int c : cols) {
      if (c < 1 || c > shape.outer().length()) throw std::invalid_argument("column out of range");
      pos.push_back({next[c]++, c});
    }
    return StandardTableau(shape, offset, std::move(pos));
  }

  // Display rows joined by '/', entries separated by spaces; '.' marks a box of
  // the inner shape.  "1 3/2" has column 1 = (1,2) and column 2 = (3).
  static StandardTableau parse(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line, '/')) {
      std::stringstream ls(line);
      std::vector<std::string> row;
      for (std::string tok; ls >> tok;) row.push_back(tok);
      if (row.empty()) throw std::invalid_argument("empty row in tableau '" + text + "'");
      rows.push_back(std::move(row));
    }
    if (rows.empty()) return StandardTableau(SkewShape(Partition{}), 0, {});
    std::vector<int> outer(rows[0].size(), 0), inner(rows[0].size(), 0);
    std::vector<std::pair<int, Box>> entries;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r > 0 && rows[r].size() > rows[r - 1].size())
        throw std::invalid_argument("rows must weakly shrink");
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        ++outer[c];
        if (rows[r][c] == ".") {
          if (inner[c] != static_cast<int>(r)) throw std::invalid_argument("inner boxes must be a partition");
          ++inner[c];
        } else {
          std::size_t used = 0;
          int v = std::stoi(rows[r][c], &used);
          if (used != rows[r][c].size()) throw std::invalid_argument("bad entry '" + rows[r][c] + "'");
          entries.push_back({v, Box{static_cast<int>(r) + 1, static_cast<int>(c) + 1}});
        }
      }
    }
    std::sort(entries.begin(), entries.end());
    int offset = entries.empty() ? 0 : entries.front().first - 1;
    std::vector<Box> pos;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (entries[k].first != offset + 1 + static_cast<int>(k))
        throw std::invalid_argument("entries must be consecutive integers");
      pos.push_back(entries[k].second);
    }
    return StandardTableau(SkewShape(Partition(outer), Partition(inner)), offset, std::move(pos));
  }

  const SkewShape& shape() const { return shape_; }
  int offset() const { return offset_; }
  int size() const { return static_cast<int>(pos_.size()); }
  int first() const { return offset_ + 1; }
  int last() const { return offset_ + size(); }
  bool holds(int k) const { return k > offset_ && k <= last(); }

  Box box(int k) const { return pos_.at(k - offset_ - 1); }
  int row(int k) const { return box(k).row; }
  int col(int k) const { return box(k).col; }
  const std::vector<Box>& positions() const { return pos_; }

  // Entry in box b, or 0 when b is not in the skew shape.
  int at(Box b) const {
    if (b.col < 1 || b.col > static_cast<int>(grid_.size())) return 0;
    const auto& column = grid_[b.col - 1];
    if (b.row < 1 || b.row > static_cast<int>(column.size())) return 0;
    return column[b.row - 1];
  }

  std::vector<int> columns() const {
    std::vector<int> c;
    c.reserve(pos_.size());
    for (Box b : pos_) c.push_back(b.col);
    return c;
  }

  std::string to_string() const {
    std::string s;
    const Partition& outer = shape_.outer();
    int rows = outer.part(1);
    for (int r = 1; r <= rows; ++r) {
      if (r > 1) s += '/';
      for (int c = 1; c <= outer.length() && outer.part(c) >= r; ++c) {
        if (c > 1) s += ' ';
        int v = at({r, c});
        s += v ? std::to_string(v) : std::string(".");
      }
    }
    return s;
  }

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.offset_ == b.offset_ && a.shape_ == b.shape_ && a.pos_ == b.pos_;
  }

 private:
  void fill_grid() {
    const Partition& outer = shape_.outer();
    grid_.assign(outer.length(), {});
    for (int j = 1; j <= outer.length(); ++j) grid_[j - 1].assign(outer.part(j), 0);
    for (std::size_t k = 0; k < pos_.size(); ++k) {
      Box b = pos_[k];
      if (!shape_.contains(b)) throw std::invalid_argument("entry outside the shape");
      int& cell = grid_[b.col - 1][b.row - 1];
      if (cell) throw std::invalid_argument("two entries in one box");
      cell = offset_ + 1 + static_cast<int>(k);
    }
  }

  SkewShape shape_;
  int offset_ = 0;
  std::vector<Box> pos_;
  std::vector<std::vector<int>> grid_;
};

inline DescentData descent_data(const StandardTableau& t) {
  DescentData d;
  for (int i = t.first(); i < t.last(); ++i) {
    Box a = t.box(i), b = t.box(i + 1);
    if (a.row > b.row) d.sa.insert(i);
    if (a.col > b.col) d.sd.insert(i);
    if (a.row == b.row) d.wa.insert(i);
    if (a.col == b.col) d.wd.insert(i);
  }
  return d;
}

inline GeneratorSet descent_set(const StandardTableau& t) {
  GeneratorSet d;
  for (int i = t.first(); i < t.last(); ++i)
    if (t.col(i + 1) <= t.col(i)) d.insert(i);
  return d;
}

// tau_{lambda/mu}: columns filled left to right, each top to bottom.
inline StandardTableau minimal_tableau(const SkewShape& shape, int offset = 0) {
  std::vector<Box> pos = shape.boxes();
  return StandardTableau(shape, offset, std::move(pos));
}
inline StandardTableau minimal_tableau(const Partition& lambda) { return minimal_tableau(SkewShape(lambda)); }

inline StandardTableau transpose(const StandardTableau& t) {
  std::vector<Box> pos;
  for (Box b : t.positions()) pos.push_back({b.col, b.row});
  return StandardTableau(SkewShape(t.shape().outer().conjugate(), t.shape().inner().conjugate()), t.offset(),
                         std::move(pos));
}

// tau^lambda: rows filled top to bottom, each left to right.
inline StandardTableau maximal_tableau(const Partition& lambda) {
  return transpose(minimal_tableau(lambda.conjugate()));
}

// Swap of the entries k and k+1, if the result is still standard.
inline std::optional<StandardTableau> try_apply_s(int k, const StandardTableau& t) {
  if (!t.holds(k) || !t.holds(k + 1)) return std::nullopt;
  Box a = t.box(k), b = t.box(k + 1);
  if (a.row == b.row || a.col == b.col) return std::nullopt;
  std::vector<Box> pos = t.positions();
  std::swap(pos[k - t.offset() - 1], pos[k - t.offset()]);
  return StandardTableau(t.shape(), t.offset(), std::move(pos));
}

inline StandardTableau apply_s(int k, const StandardTableau& t) {
  auto r = try_apply_s(k, t);
  if (!r) throw std::invalid_argument("s_" + std::to_string(k) + " t is not standard");
  return *r;
}

// Entries <= m, on the same inner shape.
inline StandardTableau restrict_leq(const StandardTableau& t, int m) {
  std::vector<int> outer = t.shape().inner().parts();
  outer.resize(t.shape().outer().length(), 0);
  std::vector<Box> pos;
  for (int k = t.first(); k <= std::min(m, t.last()); ++k) {
    Box b = t.box(k);
    pos.push_back(b);
    outer[b.col - 1] = std::max(outer[b.col - 1], b.row);
  }
  return StandardTableau(SkewShape(Partition(outer), t.shape().inner()), t.offset(), std::move(pos));
}

// Entries > m, as a skew tableau with offset m.
inline StandardTableau restrict_gt(const StandardTableau& t, int m) {
  if (m <= t.offset()) return t;
  std::vector<int> inner = t.shape().inner().parts();
  inner.resize(t.shape().outer().length(), 0);
  for (int k = t.first(); k <= std::min(m, t.last()); ++k) {
    Box b = t.box(k);
    inner[b.col - 1] = std::max(inner[b.col - 1], b.row);
  }
  std::vector<Box> pos;
  for (int k = m + 1; k <= t.last(); ++k) pos.push_back(t.box(k));
  return StandardTableau(SkewShape(t.shape().outer(), Partition(inner)), std::max(m, t.offset()),
                         std::move(pos));
}

// Shape of the entries <= m of a normal tableau.
inline Partition shape_leq(const StandardTableau& t, int m) {
  std::vector<int> p(t.shape().outer().length(), 0);
  for (int k = t.first(); k <= std::min(m, t.last()); ++k) ++p[t.col(k) - 1];
  return Partition(std::move(p));
}

// Columns read left to right, each bottom to top.
inline std::vector<int> reading_word(const StandardTableau& t) {
  std::vector<int> w;
  const Partition& outer = t.shape().outer();
  for (int j = 1; j <= outer.length(); ++j)
    for (int i = outer.part(j); i > t.shape().inner().part(j); --i) w.push_back(t.at({i, j}));
  return w;
}

inline Permutation word(const StandardTableau& t) {
  if (!t.shape().is_normal() || t.offset() != 0) throw std::invalid_argument("word needs a normal tableau");
  return Permutation(reading_word(t));
}

// The w with w * tau_lambda = t, i.e. word(t) * word(tau_lambda)^{-1}.
inline Permutation perm(const StandardTableau& t) {
  return word(t) * word(minimal_tableau(t.shape().outer())).inverse();
}

// Action of w on the entries of a normal tableau; throws if the result is not standard.
inline StandardTableau act(const Permutation& w, const StandardTableau& t) {
  if (w.size() != t.size() || t.offset() != 0) throw std::invalid_argument("size mismatch");
  std::vector<Box> pos(t.size());
  for (int k = 1; k <= t.size(); ++k) pos[w(k) - 1] = t.box(k);
  return StandardTableau(t.shape(), 0, std::move(pos));
}

// All standard tableaux of the skew shape in increasing lexicographic order.
// The order compares the column of the largest entry first; a smaller column
// of a larger entry makes the tableau lexicographically larger.
inline std::vector<StandardTableau> enumerate_std(const SkewShape& shape, int offset = 0) {
  std::vector<StandardTableau> out;
  const int n = shape.size();
  std::vector<int> cols(n);
  auto rec = [&](auto&& self, const Partition& outer, int k) -> void {
    if (k == 0) {
      out.push_back(StandardTableau::from_columns(shape, offset, cols));
      return;
    }
    SkewShape cur(outer, shape.inner());
    auto corners = cur.outer_corners();
    for (auto it = corners.rbegin(); it != corners.rend(); ++it) {
      cols[k - 1] = it->col;
      self(self, outer.remove_box(*it), k - 1);
    }
  };
  rec(rec, shape.outer(), n);
  return out;
}
inline std::vector<StandardTableau> enumerate_std(const Partition& lambda) {
  return enumerate_std(SkewShape(lambda));
}

// Number of standard tableaux of a skew shape, by removing outer corners.
class StdCounter {
 public:
  explicit StdCounter(Partition inner = {}) : inner_(std::move(inner)) {}
  std::uint64_t operator()(const Partition& outer) {
    if (outer == inner_) return 1;
    auto it = memo_.find(outer.parts());
    if (it != memo_.end()) return it->second;
    std::uint64_t total = 0;
    for (Box b : SkewShape(outer, inner_).outer_corners()) total += (*this)(outer.remove_box(b));
    memo_.emplace(outer.parts(), total);
    return total;
  }

 private:
  Partition inner_;
  std::map<std::vector<int>, std::uint64_t> memo_;
};

inline std::uint64_t count_std(const SkewShape& shape) { return StdCounter(shape.inner())(shape.outer()); }
inline std::uint64_t count_std(const Partition& lambda) { return count_std(SkewShape(lambda)); }

// Position of t in enumerate_std(t.shape()).
inline std::uint64_t lex_index(const StandardTableau& t, StdCounter& counter) {
  std::uint64_t rank = 0;
  Partition outer = t.shape().outer();
  for (int k = t.last(); k >= t.first(); --k) {
    int c = t.col(k);
    for (Box b : SkewShape(outer, t.shape().inner()).outer_corners())
      if (b.col > c) rank += counter(outer.remove_box(b));
    outer = outer.remove_box(t.box(k));
  }
  return rank;
}

// Lexicographic order on column sequences read from the largest entry down.
inline std::strong_ordering lex_compare(const StandardTableau& u, const StandardTableau& t) {
  if (u.first() != t.first() || u.last() != t.last()) throw std::invalid_argument("entry ranges differ");
  for (int l = t.last(); l >= t.first(); --l) {
    int cu = u.col(l), ct = t.col(l);
    if (cu != ct) return ct < cu ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

// u <= t: shape(u|<=m) <= shape(t|<=m) for every m.
inline bool extended_dominance_leq(const StandardTableau& u, const StandardTableau& t) {
  if (u.size() != t.size() || u.offset() != 0 || t.offset() != 0)
    throw std::invalid_argument("tableaux must be normal of the same size");
  const int n = u.size();
  int width = std::max(u.shape().outer().length(), t.shape().outer().length());
  std::vector<int> pu(width + 1, 0), pt(width + 1, 0);
  for (int m = 1; m <= n; ++m) {
    ++pu[u.col(m)];
    ++pt[t.col(m)];
    int su = 0, st = 0;
    for (int j = 1; j <= width; ++j) {
      su += pu[j];
      st += pt[j];
      if (st > su) return false;
    }
  }
  return true;
}

inline bool tableau_dominance_leq(const StandardTableau& u, const StandardTableau& t) {
  if (!(u.shape() == t.shape())) throw std::invalid_argument("shapes differ");
  return extended_dominance_leq(u, t);
}

// t has entries m, m+1, ...; m lies in the first nonempty column i, m+1 in
// column i+1, and the entries above m+1 form the minimal filling.
inline bool is_m_critical(const StandardTableau& t, int m) {
  if (t.first() != m || t.size() < 2) return false;
  const Partition& outer = t.shape().outer();
  const Partition& inner = t.shape().inner();
  int i = 1;
  while (i <= outer.length() && outer.part(i) == inner.part(i)) ++i;
  if (i > outer.length() || outer.part(i + 1) <= inner.part(i + 1)) return false;
  if (t.col(m) != i || t.col(m + 1) != i + 1) return false;
  return descent_data(restrict_gt(t, m + 1)).sd.empty();
}

}  // namespace wcell
