#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace planegraph {

/// Fixed-width bit-vector over segment indices. Two words cover the
/// C(16,2) = 120 segments of the largest point set we will ever enumerate.
class EdgeSet {
 public:
  static constexpr int kWords = 2;
  static constexpr int kCapacity = 64 * kWords;

  constexpr EdgeSet() = default;

  constexpr bool test(int k) const { return (words_[word(k)] >> bit(k)) & 1U; }
  constexpr void set(int k) { words_[word(k)] |= std::uint64_t{1} << bit(k); }
  constexpr void reset(int k) { words_[word(k)] &= ~(std::uint64_t{1} << bit(k)); }
  constexpr EdgeSet with(int k) const {
    EdgeSet e = *this;
    e.set(k);
    return e;
  }

  constexpr bool none() const { return (words_[0] | words_[1]) == 0; }
  constexpr bool any() const { return !none(); }
  constexpr int count() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }
  constexpr bool intersects(const EdgeSet& o) const {
    return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
  }
  constexpr bool contains(const EdgeSet& o) const { return (o & ~*this).none(); }

  /// Lowest set index >= from, or -1.
  constexpr int next(int from) const {
    if (from >= kCapacity) return -1;
    int w = word(from);
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << bit(from));
    while (true) {
      if (cur != 0) return 64 * w + std::countr_zero(cur);
      if (++w == kWords) return -1;
      cur = words_[w];
    }
  }
  constexpr int first() const { return next(0); }

  /// Bits [0, k) set.
  static constexpr EdgeSet prefix(int k) {
    EdgeSet e;
    for (int w = 0; w < kWords; ++w) {
      const int lo = 64 * w;
      if (k >= lo + 64) e.words_[w] = ~std::uint64_t{0};
      else if (k > lo) e.words_[w] = (std::uint64_t{1} << (k - lo)) - 1;
    }
    return e;
  }

  constexpr EdgeSet operator|(const EdgeSet& o) const { return {words_[0] | o.words_[0], words_[1] | o.words_[1]}; }
  constexpr EdgeSet operator&(const EdgeSet& o) const { return {words_[0] & o.words_[0], words_[1] & o.words_[1]}; }
  constexpr EdgeSet operator~() const { return {~words_[0], ~words_[1]}; }
  constexpr EdgeSet& operator|=(const EdgeSet& o) { return *this = *this | o; }
  constexpr EdgeSet& operator&=(const EdgeSet& o) { return *this = *this & o; }
  friend constexpr bool operator==(const EdgeSet&, const EdgeSet&) = default;

  std::uint64_t word_at(int w) const { return words_[static_cast<std::size_t>(w)]; }

  /// Lowercase hex, most significant nibble first, trimmed to ceil(bits/4)
  /// digits (at least one). Bit 0 is segment 0.
  std::string to_hex(int bits) const;
  static EdgeSet from_hex(std::string_view hex);

  template <class F>
  constexpr void for_each(F&& f) const {
    for (int k = first(); k >= 0; k = next(k + 1)) f(k);
  }

 private:
  constexpr EdgeSet(std::uint64_t lo, std::uint64_t hi) : words_{lo, hi} {}
  static constexpr int word(int k) { return k >> 6; }
  static constexpr int bit(int k) { return k & 63; }

  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace planegraph
