#include "lcd/bit_vector.hpp"

#include <algorithm>
#include <stdexcept>

#include "lcd/errors.hpp"

namespace lcd {

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw PreconditionError("bit string contains a character other than 0/1");
  }
  return v;
}

BitVector BitVector::ones(std::size_t length) {
  BitVector v(length);
  std::fill(v.words_.begin(), v.words_.end(), ~std::uint64_t{0});
  v.clear_padding();
  return v;
}

BitVector BitVector::unit(std::size_t length, std::size_t index) {
  BitVector v(length);
  v.set(index);
  return v;
}

BitVector BitVector::from_word(std::size_t length, std::uint64_t value) {
  BitVector v(length);
  if (!v.words_.empty()) v.words_[0] = value;
  v.clear_padding();
  return v;
}

std::size_t BitVector::weight() const noexcept {
  std::size_t w = 0;
  for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVector::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto word = words_[w];
    while (word != 0) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

std::size_t BitVector::first_one() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return length_;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.length_ != length_) throw PreconditionError("BitVector length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  if (other.length_ != length_) throw PreconditionError("BitVector length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

bool inner_product(const BitVector& a, const BitVector& b) {
  if (a.length_ != b.length_) throw PreconditionError("BitVector length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.words_.size(); ++i) acc ^= a.words_[i] & b.words_[i];
  return (std::popcount(acc) & 1) != 0;
}

BitVector BitVector::erase(std::span<const std::size_t> sorted_indices) const {
  BitVector out(length_ - sorted_indices.size());
  std::size_t next = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < length_; ++i) {
    if (k < sorted_indices.size() && sorted_indices[k] == i) {
      ++k;
      continue;
    }
    if (get(i)) out.set(next);
    ++next;
  }
  return out;
}

BitVector BitVector::select(std::span<const std::size_t> indices) const {
  BitVector out(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i)
    if (get(indices[i])) out.set(i);
  return out;
}

BitVector BitVector::concat(const BitVector& tail) const {
  BitVector out(length_ + tail.length_);
  std::copy(words_.begin(), words_.end(), out.words_.begin());
  for (auto i : tail.support()) out.set(length_ + i);
  return out;
}

BitVector BitVector::prepend(bool bit) const {
  BitVector out(length_ + 1);
  out.set(0, bit);
  for (auto i : support()) out.set(i + 1);
  return out;
}

BitVector BitVector::append(bool bit) const {
  BitVector out(length_ + 1);
  std::copy(words_.begin(), words_.end(), out.words_.begin());
  out.set(length_, bit);
  return out;
}

bool BitVector::padding_clear() const noexcept {
  const std::size_t tail = length_ % kWordBits;
  if (tail == 0 || words_.empty()) return true;
  return (words_.back() >> tail) == 0;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
  if (auto c = a.length_ <=> b.length_; c != 0) return c;
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff == 0) continue;
    const auto bit = std::countr_zero(diff);
    return ((a.words_[w] >> bit) & 1U) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

void BitVector::clear_padding() noexcept {
  const std::size_t tail = length_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << tail) - 1;
}

}  // namespace lcd
