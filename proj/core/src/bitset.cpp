#include "circledom/bitset.hpp"

namespace circledom {

int VertexMask::count() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool VertexMask::none() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

bool VertexMask::all() const { return count() == size_; }

bool VertexMask::intersects(const VertexMask& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

bool VertexMask::is_subset_of(const VertexMask& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

VertexMask& VertexMask::operator|=(const VertexMask& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexMask& VertexMask::operator&=(const VertexMask& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexMask& VertexMask::subtract(const VertexMask& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<int> VertexMask::to_vector() const {
  std::vector<int> out;
  for_each([&](int v) { out.push_back(v); });
  return out;
}

VertexMask VertexMask::from(int size, const std::vector<int>& members) {
  VertexMask mask(size);
  for (int v : members) mask.set(v);
  return mask;
}

}  // namespace circledom
