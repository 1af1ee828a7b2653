#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "blocklang/bitvector.hpp"

namespace blocklang {

using Symbol = std::uint32_t;

/// Largest universe k^ell that may be materialized as a bitmap.
inline constexpr std::uint64_t kUniverseCap = std::uint64_t{1} << 40;

/// Alphabet size k and block length ell of a block language.
class BlockParams {
 public:
  /// Throws BadParams when k == 0 or ell == 0, ParamsTooLarge when k^ell > 2^40.
  BlockParams(std::uint32_t k, std::uint32_t ell);

  /// Parameters of a quotient by a word of full length; the only place a
  /// zero block length is admitted.
  static BlockParams with_residual_length(std::uint32_t k, std::uint32_t ell);

  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t ell() const noexcept { return ell_; }
  std::uint64_t universe_size() const noexcept { return universe_; }
  /// k^i for i <= ell.
  std::uint64_t power(std::uint32_t i) const noexcept;

  friend bool operator==(const BlockParams&, const BlockParams&) = default;

 private:
  BlockParams(std::uint32_t k, std::uint32_t ell, bool allow_empty_block);

  std::uint32_t k_;
  std::uint32_t ell_;
  std::uint64_t universe_;
};

/// Returns k^e, or 0 if the result would exceed the universe cap.
std::uint64_t checked_power(std::uint64_t k, std::uint64_t e) noexcept;

/// A word as a sequence of symbol indices 0..k-1.
struct Word {
  std::vector<Symbol> symbols;

  std::size_t size() const noexcept { return symbols.size(); }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

/// Letters a, b, c, ... when k <= 26, otherwise dot-separated decimal indices.
std::string render_word(const Word& w, std::uint32_t k);
/// Inverse of render_word. The empty string is the empty word.
Word parse_word(std::string_view text, std::uint32_t k);

Word reversed(const Word& w);

/// Base-k value of w, most significant symbol first. The length of w fixes
/// the universe; p supplies k and the expected length.
std::uint64_t word_to_index(const Word& w, const BlockParams& p);
Word index_to_word(std::uint64_t index, const BlockParams& p);

/// Membership bitmap of a block language: bit i is set iff the i-th word of
/// Sigma^ell in lexicographic order belongs to the language.
class Bitmap {
 public:
  /// The empty language.
  explicit Bitmap(const BlockParams& params);
  /// Throws WrongLength unless bits.size() == k^ell.
  Bitmap(const BlockParams& params, BitVector bits);

  static Bitmap from_string(const BlockParams& params, std::string_view text);

  const BlockParams& params() const noexcept { return params_; }
  const BitVector& bits() const noexcept { return bits_; }
  std::uint64_t size() const noexcept { return bits_.size(); }
  bool test(std::uint64_t i) const noexcept { return bits_.test(i); }
  bool empty_language() const noexcept { return bits_.none(); }
  std::string to_string() const { return bits_.to_string(); }

  friend bool operator==(const Bitmap&, const Bitmap&) = default;

 private:
  BlockParams params_;
  BitVector bits_;
};

struct Segment {
  std::uint32_t level;
  std::uint64_t index;
  BitVector bits;
};

/// Distinct non-zero segments of one length, kept in canonical order
/// (descending on the bit string, i.e. by least accepted word).
struct SegmentSet {
  std::uint32_t level = 0;
  std::vector<BitVector> members;

  std::size_t size() const noexcept { return members.size(); }
  /// Position of s in members, or size() when absent.
  std::size_t find(const BitVector& s) const;
};

Bitmap bitmap_from_words(const std::vector<Word>& words, const BlockParams& p);
/// Members of the language in lexicographic order.
std::vector<Word> words_from_bitmap(const Bitmap& b);

/// Bits [j k^i, (j+1) k^i) of b.
Segment segment(const Bitmap& b, std::uint32_t level, std::uint64_t index);

/// Bitmap of the left quotient w^{-1}L, with block length ell - |w|.
Bitmap quotient_bitmap(const Bitmap& b, const Word& w);

SegmentSet segment_set(const Bitmap& b, std::uint32_t level);
/// segment_set for every level 0..ell; result[i].level == i.
std::vector<SegmentSet> all_segment_sets(const Bitmap& b);

}  // namespace blocklang
