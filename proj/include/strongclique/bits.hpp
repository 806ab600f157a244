#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace strongclique {

/// Largest vertex count a Graph may have. Every search kernel works on
/// fixed-width rows of this many bits.
inline constexpr int kMaxVertices = 512;

/// Fixed-width set of vertex indices in [0, kMaxVertices).
class VertexBits {
 public:
  static constexpr int kWords = kMaxVertices / 64;

  constexpr VertexBits() = default;

  /// Bits 0..n-1 set.
  static VertexBits prefix(int n) {
    VertexBits b;
    for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
      b.words_[w] = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return b;
  }

  void set(int v) { words_[v >> 6] |= mask(v); }
  void reset(int v) { words_[v >> 6] &= ~mask(v); }
  [[nodiscard]] bool test(int v) const { return (words_[v >> 6] & mask(v)) != 0; }

  [[nodiscard]] int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  [[nodiscard]] bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  [[nodiscard]] bool any() const { return !none(); }

  /// Lowest member, or -1.
  [[nodiscard]] int first() const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
    return -1;
  }

  /// Lowest member strictly greater than v, or -1.
  [[nodiscard]] int next(int v) const {
    ++v;
    if (v >= kMaxVertices) return -1;
    int w = v >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (cur) return w * 64 + std::countr_zero(cur);
      if (++w == kWords) return -1;
      cur = words_[w];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t cur = words_[w];
      while (cur) {
        f(w * 64 + std::countr_zero(cur));
        cur &= cur - 1;
      }
    }
  }

  [[nodiscard]] bool intersects(const VertexBits& o) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }
  [[nodiscard]] bool subset_of(const VertexBits& o) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }
  /// |this & o| without materializing the intersection.
  [[nodiscard]] int count_and(const VertexBits& o) const {
    int c = 0;
    for (int w = 0; w < kWords; ++w) c += std::popcount(words_[w] & o.words_[w]);
    return c;
  }

  VertexBits& operator&=(const VertexBits& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  VertexBits& operator|=(const VertexBits& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  /// this &= ~o
  VertexBits& subtract(const VertexBits& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend VertexBits operator&(VertexBits a, const VertexBits& b) { return a &= b; }
  friend VertexBits operator|(VertexBits a, const VertexBits& b) { return a |= b; }
  friend VertexBits operator-(VertexBits a, const VertexBits& b) { return a.subtract(b); }
  bool operator==(const VertexBits&) const = default;

 private:
  static constexpr std::uint64_t mask(int v) { return std::uint64_t{1} << (v & 63); }

  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace strongclique
