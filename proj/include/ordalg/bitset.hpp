#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ordalg {

/// Fixed-width dynamic bitset used for lower/upper sets of a window.
class DynBitset {
public:
  DynBitset() = default;
  explicit DynBitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64) {}

  [[nodiscard]] std::size_t size() const { return bits_; }

  void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  void reset(std::size_t i) {
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }
  [[nodiscard]] bool test(std::size_t i) const {
    return (words_[i / 64] >> (i % 64)) & 1U;
  }

  DynBitset &operator&=(const DynBitset &o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  DynBitset &operator|=(const DynBitset &o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  friend DynBitset operator&(DynBitset a, const DynBitset &b) { return a &= b; }

  [[nodiscard]] bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  [[nodiscard]] bool none() const { return !any(); }
  [[nodiscard]] std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  /// True iff (*this & a & b) is nonempty, without materialising it.
  [[nodiscard]] bool intersects(const DynBitset &a, const DynBitset &b) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & a.words_[w] & b.words_[w]) return true;
    return false;
  }
  [[nodiscard]] bool intersects(const DynBitset &a) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & a.words_[w]) return true;
    return false;
  }
  [[nodiscard]] bool is_subset_of(const DynBitset &o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  /// Set bit indices in ascending order.
  [[nodiscard]] std::vector<std::uint32_t> indices() const {
    std::vector<std::uint32_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        auto tz = static_cast<std::size_t>(std::countr_zero(bits));
        out.push_back(static_cast<std::uint32_t>(w * 64 + tz));
        bits &= bits - 1;
      }
    }
    return out;
  }

  bool operator==(const DynBitset &) const = default;

private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace ordalg
