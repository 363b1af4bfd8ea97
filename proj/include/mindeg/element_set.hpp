#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace mindeg {

/// Fixed-width bitset whose width is chosen at runtime. Used for subgroup
/// membership (one bit per group element) and for cover masks in the solver.
class ElementSet
{
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t size)
    : size_(size), words_((size + 63) / 64, 0)
  {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const
  {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const
  {
    for (auto w : words_)
      if (w)
        return false;
    return true;
  }
  bool any() const { return !none(); }

  /// Index of the lowest set bit, or size() when empty.
  std::size_t first() const
  {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k])
        return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return size_;
  }

  /// Index of the lowest set bit strictly above i, or size().
  std::size_t next(std::size_t i) const
  {
    ++i;
    if (i >= size_)
      return size_;
    std::size_t k = i >> 6;
    std::uint64_t w = words_[k] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (w)
        return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
      if (++k == words_.size())
        return size_;
      w = words_[k];
    }
  }

  template<typename F>
  void for_each(F &&f) const
  {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const
  {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  bool is_subset_of(ElementSet const &other) const
  {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k])
        return false;
    return true;
  }

  bool intersects(ElementSet const &other) const
  {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k])
        return true;
    return false;
  }

  std::size_t count_and(ElementSet const &other) const
  {
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
      c += static_cast<std::size_t>(std::popcount(words_[k] & other.words_[k]));
    return c;
  }

  /// Lowest index set in both, or size().
  std::size_t first_and(ElementSet const &other) const
  {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (auto w = words_[k] & other.words_[k])
        return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
    return size_;
  }

  ElementSet &operator&=(ElementSet const &o)
  {
    for (std::size_t k = 0; k < words_.size(); ++k)
      words_[k] &= o.words_[k];
    return *this;
  }
  ElementSet &operator|=(ElementSet const &o)
  {
    for (std::size_t k = 0; k < words_.size(); ++k)
      words_[k] |= o.words_[k];
    return *this;
  }
  /// Set difference.
  ElementSet &operator-=(ElementSet const &o)
  {
    for (std::size_t k = 0; k < words_.size(); ++k)
      words_[k] &= ~o.words_[k];
    return *this;
  }

  friend ElementSet operator&(ElementSet a, ElementSet const &b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, ElementSet const &b) { return a |= b; }
  friend ElementSet operator-(ElementSet a, ElementSet const &b) { return a -= b; }

  friend bool operator==(ElementSet const &, ElementSet const &) = default;
  friend auto operator<=>(ElementSet const &a, ElementSet const &b)
  {
    return a.words_ <=> b.words_;
  }

  std::size_t hash() const
  {
    std::size_t h = size_;
    for (auto w : words_)
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash
{
  std::size_t operator()(ElementSet const &s) const { return s.hash(); }
};

} // namespace mindeg
