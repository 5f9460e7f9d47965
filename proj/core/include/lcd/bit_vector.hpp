#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lcd {

/// A vector over GF(2), packed into 64-bit words (coordinate i lives in bit
/// i % 64 of word i / 64). Bits past size() in the last word are always zero.
class BitVector {
 public:
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

  /// Parses a string of '0'/'1' characters; coordinate 0 is the first character.
  static BitVector from_string(std::string_view bits);
  static BitVector ones(std::size_t length);
  static BitVector unit(std::size_t length, std::size_t index);
  /// The low `length` bits of `value`, coordinate i taken from bit i.
  static BitVector from_word(std::size_t length, std::uint64_t value);

  static constexpr std::size_t word_count(std::size_t length) { return (length + kWordBits - 1) / kWordBits; }

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  bool get(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value)
      words_[i / kWordBits] |= mask;
    else
      words_[i / kWordBits] &= ~mask;
  }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits); }

  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;
  bool is_odd() const noexcept { return (weight() & 1U) != 0; }
  /// Sorted list of coordinates holding a one.
  std::vector<std::size_t> support() const;
  /// Index of the lowest set coordinate, or size() if zero.
  std::size_t first_one() const noexcept;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

  /// Standard inner product over GF(2): parity of popcount(a AND b).
  friend bool inner_product(const BitVector& a, const BitVector& b);

  /// Copy with the listed coordinates removed; `sorted_indices` must be ascending and distinct.
  BitVector erase(std::span<const std::size_t> sorted_indices) const;
  /// Copy restricted to the listed coordinates, in the given order.
  BitVector select(std::span<const std::size_t> indices) const;
  /// Concatenation (*this, tail).
  BitVector concat(const BitVector& tail) const;
  /// (bit, *this)
  BitVector prepend(bool bit) const;
  /// (*this, bit)
  BitVector append(bool bit) const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  /// The first word; meaningful for vectors of length <= 64.
  std::uint64_t low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

  /// True when every bit past size() is clear.
  bool padding_clear() const noexcept;

  std::string to_string() const;

  friend bool operator==(const BitVector& a, const BitVector& b) = default;
  /// Orders by length, then by the '0'/'1' string lexicographically.
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b);

 private:
  void clear_padding() noexcept;

  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace lcd
