#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace circledom {

// Fixed-width dynamic bitset over vertex ids 0..size()-1.
class VertexMask {
 public:
  VertexMask() = default;
  explicit VertexMask(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }

  void set(int v) { words_[v >> 6] |= bit(v); }
  void reset(int v) { words_[v >> 6] &= ~bit(v); }
  bool test(int v) const { return (words_[v >> 6] & bit(v)) != 0; }

  int count() const;
  bool none() const;
  bool all() const;
  bool intersects(const VertexMask& other) const;
  bool is_subset_of(const VertexMask& other) const;

  VertexMask& operator|=(const VertexMask& other);
  VertexMask& operator&=(const VertexMask& other);
  VertexMask& subtract(const VertexMask& other);

  friend VertexMask operator|(VertexMask lhs, const VertexMask& rhs) { return lhs |= rhs; }
  friend VertexMask operator&(VertexMask lhs, const VertexMask& rhs) { return lhs &= rhs; }
  bool operator==(const VertexMask&) const = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        f(static_cast<int>(w * 64) + std::countr_zero(word));
        word &= word - 1;
      }
    }
  }

  std::vector<int> to_vector() const;
  static VertexMask from(int size, const std::vector<int>& members);

 private:
  static std::uint64_t bit(int v) { return std::uint64_t{1} << (v & 63); }

  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace circledom
