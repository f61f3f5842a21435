#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wcell {

// Box (row, col), both 1-based. Column j of a shape holds part j of the partition.
struct Box {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Box&, const Box&) = default;
};

// Partition stored as its column lengths, weakly decreasing, no trailing zeros.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      if (parts_[j] < 0 || (j > 0 && parts_[j] > parts_[j - 1]))
        throw std::invalid_argument("parts must be weakly decreasing and nonnegative");
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // "3,2" -> (3,2)
  static Partition parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw std::invalid_argument("empty part in '" + text + "'");
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument("bad part '" + item + "'");
      parts.push_back(v);
    }
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  // 1-based; zero past the end.
  int part(int j) const { return j >= 1 && j <= length() ? parts_[j - 1] : 0; }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool contains(Box b) const { return b.row >= 1 && b.col >= 1 && b.row <= part(b.col); }
  bool contains(const Partition& o) const {
    for (int j = 1; j <= o.length(); ++j)
      if (o.part(j) > part(j)) return false;
    return true;
  }

  Partition conjugate() const {
    std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
    for (int p : parts_)
      for (int r = 0; r < p; ++r) ++c[r];
    return Partition(std::move(c));
  }

  // Boxes whose removal leaves a partition, ordered by column.
  std::vector<Box> removable_boxes() const {
    std::vector<Box> out;
    for (int j = 1; j <= length(); ++j)
      if (part(j) > part(j + 1)) out.push_back({part(j), j});
    return out;
  }
  std::vector<Box> addable_boxes() const {
    std::vector<Box> out;
    for (int j = 1; j <= length() + 1; ++j)
      if (j == 1 || part(j) < part(j - 1)) out.push_back({part(j) + 1, j});
    return out;
  }
  Partition remove_box(Box b) const {
    std::vector<int> p = parts_;
    if (b.col < 1 || b.col > length() || p[b.col - 1] != b.row || part(b.col + 1) == b.row)
      throw std::invalid_argument("box is not removable");
    --p[b.col - 1];
    return Partition(std::move(p));
  }
  Partition add_box(Box b) const {
    std::vector<int> p = parts_;
    if (b.col == length() + 1) p.push_back(0);
    if (b.col < 1 || b.col > static_cast<int>(p.size()) || p[b.col - 1] + 1 != b.row ||
        (b.col > 1 && p[b.col - 2] < b.row))
      throw std::invalid_argument("box is not addable");
    ++p[b.col - 1];
    return Partition(std::move(p));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(parts_[j]);
    }
    return s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// mu <= lambda: every partial sum of lambda is at most the matching partial sum of mu.
// The one-column shape is the minimum, the one-row shape the maximum.
inline bool dominance_leq(const Partition& mu, const Partition& lambda) {
  int a = 0, b = 0;
  int len = std::max(mu.length(), lambda.length());
  for (int j = 1; j <= len; ++j) {
    a += lambda.part(j);
    b += mu.part(j);
    if (a > b) return false;
  }
  return mu.size() == lambda.size();
}

// All partitions of n, in decreasing lexicographic order of their parts.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int cap) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(rec, n, n);
  return out;
}

class SkewShape {
 public:
  SkewShape() = default;
  explicit SkewShape(Partition outer, Partition inner = {})
      : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_)) throw std::invalid_argument("inner shape not contained in outer");
  }

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  bool is_normal() const { return inner_.length() == 0; }
  int size() const { return outer_.size() - inner_.size(); }
  bool contains(Box b) const { return outer_.contains(b) && !inner_.contains(b); }

  // Boxes of the skew shape column by column, top to bottom.
  std::vector<Box> boxes() const {
    std::vector<Box> out;
    for (int j = 1; j <= outer_.length(); ++j)
      for (int i = inner_.part(j) + 1; i <= outer_.part(j); ++i) out.push_back({i, j});
    return out;
  }
  // Removable boxes of the outer shape that lie in the skew shape.
  std::vector<Box> outer_corners() const {
    std::vector<Box> out;
    for (Box b : outer_.removable_boxes())
      if (!inner_.contains(b)) out.push_back(b);
    return out;
  }
  // Removable boxes of the inner shape.
  std::vector<Box> inner_corners() const { return inner_.removable_boxes(); }

  std::string to_string() const {
    return is_normal() ? outer_.to_string() : outer_.to_string() + "/" + inner_.to_string();
  }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

}  // namespace wcell
