#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace wcell {

// Subset of the simple reflections {s_1, ..., s_63}, stored as a bit mask.
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(std::uint64_t bits) : bits_(bits) {}
  GeneratorSet(std::initializer_list<int> gens) {
    for (int g : gens) insert(g);
  }

  static GeneratorSet from_vector(const std::vector<int>& gens) {
    GeneratorSet s;
    for (int g : gens) s.insert(g);
    return s;
  }

  constexpr bool contains(int i) const {
    return i >= 1 && i < 64 && ((bits_ >> i) & 1u);
  }
  void insert(int i) {
    if (i < 1 || i >= 64) throw std::out_of_range("generator index out of range");
    bits_ |= std::uint64_t{1} << i;
  }
  void erase(int i) {
    if (i >= 1 && i < 64) bits_ &= ~(std::uint64_t{1} << i);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  int max() const { return bits_ ? 63 - std::countl_zero(bits_) : 0; }
  int min() const { return bits_ ? std::countr_zero(bits_) : 0; }

  constexpr bool subset_of(GeneratorSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(GeneratorSet o) const {
    return subset_of(o) && bits_ != o.bits_;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr GeneratorSet operator|(GeneratorSet a, GeneratorSet b) {
    return GeneratorSet(a.bits_ | b.bits_);
  }
  friend constexpr GeneratorSet operator&(GeneratorSet a, GeneratorSet b) {
    return GeneratorSet(a.bits_ & b.bits_);
  }
  friend constexpr GeneratorSet operator^(GeneratorSet a, GeneratorSet b) {
    return GeneratorSet(a.bits_ ^ b.bits_);
  }
  friend constexpr GeneratorSet operator-(GeneratorSet a, GeneratorSet b) {
    return GeneratorSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(GeneratorSet, GeneratorSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace wcell
