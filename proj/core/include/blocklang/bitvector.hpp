#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace blocklang {

/// Packed, fixed-length bit sequence. Bit 0 is the leftmost character of the
/// textual form, so "1011" has bits 0, 2 and 3 set.
///
/// Ordering is lexicographic on the textual form ('0' < '1'); a proper prefix
/// sorts first.
class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

  /// Parses a string over {0,1}; throws Error(Parse) on any other character.
  static BitVector from_string(std::string_view text);
  static BitVector ones(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true) noexcept {
    const word_type mask = word_type{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void reset(std::size_t i) noexcept { set(i, false); }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= word_type{1} << (i % kWordBits); }

  bool any() const noexcept;
  bool none() const noexcept { return !any(); }
  std::size_t count() const noexcept;
  /// Index of the lowest set bit, or size() when none is set.
  std::size_t find_first() const noexcept;
  /// Index of the lowest set bit at position >= from, or size().
  std::size_t find_next(std::size_t from) const noexcept;

  /// Copy of bits [offset, offset + length).
  BitVector slice(std::size_t offset, std::size_t length) const;
  /// Overwrites bits [offset, offset + src.size()) with src.
  void assign_range(std::size_t offset, const BitVector& src);
  void append(const BitVector& tail);

  bool is_submask_of(const BitVector& other) const noexcept;
  bool intersects(const BitVector& other) const noexcept;

  BitVector& operator|=(const BitVector& rhs) noexcept;
  BitVector& operator&=(const BitVector& rhs) noexcept;
  BitVector& operator^=(const BitVector& rhs) noexcept;
  /// Clears the bits of rhs.
  BitVector& subtract(const BitVector& rhs) noexcept;
  BitVector operator~() const;

  friend BitVector operator|(BitVector lhs, const BitVector& rhs) { return lhs |= rhs; }
  friend BitVector operator&(BitVector lhs, const BitVector& rhs) { return lhs &= rhs; }
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }

  friend bool operator==(const BitVector& a, const BitVector& b) noexcept {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) noexcept;

  std::string to_string() const;
  std::size_t hash() const noexcept;

  const std::vector<word_type>& words() const noexcept { return words_; }

 private:
  static std::size_t word_count(std::size_t bits) noexcept { return (bits + kWordBits - 1) / kWordBits; }
  void clear_tail() noexcept;

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

/// Orders vectors so that the one accepting the lexicographically least word
/// comes first: descending on the textual form.
struct DescendingBits {
  bool operator()(const BitVector& a, const BitVector& b) const noexcept { return b < a; }
};

}  // namespace blocklang

template <>
struct std::hash<blocklang::BitVector> {
  std::size_t operator()(const blocklang::BitVector& v) const noexcept { return v.hash(); }
};
