#include "haar/bitset.hpp"

#include <stdexcept>

namespace haar {

Bitset Bitset::full(std::size_t size)
{
  Bitset b(size);
  for (std::size_t i = 0; i < size; ++i)
    b.set(i);
  return b;
}

Bitset Bitset::from_indices(std::size_t size, const std::vector<int> & indices)
{
  Bitset b(size);
  for (int i : indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= size)
      throw std::out_of_range("bitset index " + std::to_string(i) + " outside universe of size " + std::to_string(size));
    b.set(static_cast<std::size_t>(i));
  }
  return b;
}

Bitset Bitset::from_hex(std::size_t size, std::string_view hex)
{
  if (hex.starts_with("0x") || hex.starts_with("0X"))
    hex.remove_prefix(2);
  if (hex.empty())
    throw std::invalid_argument("empty hex mask");
  Bitset b(size);
  std::size_t bit = 0;
  for (std::size_t k = hex.size(); k-- > 0; bit += 4) {
    char c = hex[k];
    unsigned v = 0;
    if (c >= '0' && c <= '9')
      v = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f')
      v = static_cast<unsigned>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F')
      v = static_cast<unsigned>(c - 'A' + 10);
    else
      throw std::invalid_argument(std::string("bad hex digit '") + c + "'");
    for (unsigned j = 0; j < 4; ++j) {
      if (!((v >> j) & 1U))
        continue;
      if (bit + j >= size)
        throw std::invalid_argument("hex mask sets bit " + std::to_string(bit + j) + " outside universe of size " +
                                    std::to_string(size));
      b.set(bit + j);
    }
  }
  return b;
}

std::size_t Bitset::find_next(std::size_t from) const
{
  if (from >= size_)
    return size_;
  std::size_t k = from / kWordBits;
  Word w = words_[k] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (w)
      return k * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
    if (++k == words_.size())
      return size_;
    w = words_[k];
  }
}

std::vector<int> Bitset::indices() const
{
  std::vector<int> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
  return out;
}

std::string Bitset::to_hex() const
{
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string digits;
  for (std::size_t bit = 0; bit < size_; bit += 4) {
    unsigned v = 0;
    for (unsigned j = 0; j < 4 && bit + j < size_; ++j)
      v |= static_cast<unsigned>(test(bit + j)) << j;
    digits.push_back(kDigits[v]);
  }
  while (digits.size() > 1 && digits.back() == '0')
    digits.pop_back();
  if (digits.empty())
    digits = "0";
  return "0x" + std::string(digits.rbegin(), digits.rend());
}

std::size_t Bitset::hash() const
{
  // FNV-1a over the words.
  std::uint64_t h = 1469598103934665603ULL ^ size_;
  for (Word w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace haar
