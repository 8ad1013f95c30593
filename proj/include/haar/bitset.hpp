#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace haar {

/**
 * Dynamically sized bitset over a fixed universe 0..size()-1.
 *
 * Used both as an element subset of a group (ElementSet) and as an adjacency
 * row of a dense digraph. Bits at or beyond size() are always clear, so word
 * comparisons and popcounts need no masking.
 */
class Bitset
{
public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  static Bitset full(std::size_t size);
  static Bitset from_indices(std::size_t size, const std::vector<int> & indices);

  /// Parse a lowercase or uppercase hex mask, optional "0x" prefix; LSB is index 0.
  /// Throws std::invalid_argument on bad digits or bits set at or beyond size.
  static Bitset from_hex(std::size_t size, std::string_view hex);

  std::size_t size() const { return size_; }
  bool empty() const { return none(); }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void set(std::size_t i, bool value) { value ? set(i) : reset(i); }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t count() const
  {
    std::size_t c = 0;
    for (Word w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const
  {
    for (Word w : words_)
      if (w != 0)
        return false;
    return true;
  }

  /// Number of set bits shared with other.
  std::size_t intersect_count(const Bitset & other) const
  {
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
      c += static_cast<std::size_t>(std::popcount(words_[k] & other.words_[k]));
    return c;
  }

  bool is_subset_of(const Bitset & other) const
  {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k])
        return false;
    return true;
  }

  Bitset & operator|=(const Bitset & o)
  {
    for (std::size_t k = 0; k < words_.size(); ++k)
      words_[k] |= o.words_[k];
    return *this;
  }
  Bitset & operator&=(const Bitset & o)
  {
    for (std::size_t k = 0; k < words_.size(); ++k)
      words_[k] &= o.words_[k];
    return *this;
  }
  Bitset & operator^=(const Bitset & o)
  {
    for (std::size_t k = 0; k < words_.size(); ++k)
      words_[k] ^= o.words_[k];
    return *this;
  }
  /// Complement within the universe.
  Bitset operator~() const
  {
    Bitset r(size_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      r.words_[k] = ~words_[k];
    if (size_ % kWordBits)
      r.words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
    return r;
  }

  friend Bitset operator|(Bitset a, const Bitset & b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset & b) { return a &= b; }
  friend Bitset operator^(Bitset a, const Bitset & b) { return a ^= b; }

  /// First set bit at or after from, or size() when none.
  std::size_t find_next(std::size_t from) const;
  std::size_t find_first() const { return find_next(0); }

  template <typename F>
  void for_each(F && f) const
  {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Word w = words_[k];
      while (w) {
        f(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> indices() const;

  /// Lowercase hex with "0x" prefix and no leading zeros ("0x0" when empty).
  std::string to_hex() const;

  const std::vector<Word> & words() const { return words_; }
  std::size_t hash() const;

  friend bool operator==(const Bitset &, const Bitset &) = default;
  friend auto operator<=>(const Bitset & a, const Bitset & b)
  {
    if (auto c = a.size_ <=> b.size_; c != 0)
      return c;
    // Most significant word first so the order matches the numeric value of the mask.
    for (std::size_t k = a.words_.size(); k-- > 0;)
      if (auto c = a.words_[k] <=> b.words_[k]; c != 0)
        return c;
    return std::strong_ordering::equal;
  }

private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

struct BitsetHash
{
  std::size_t operator()(const Bitset & b) const { return b.hash(); }
};

}  // namespace haar
