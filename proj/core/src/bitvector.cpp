#include "blocklang/bitvector.hpp"

#include <algorithm>
#include <cassert>

#include "blocklang/error.hpp"

namespace blocklang {

BitVector BitVector::from_string(std::string_view text) {
  BitVector v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      v.set(i);
    } else if (text[i] != '0') {
      throw Error(ErrorCode::Parse, "bit string contains '" + std::string(1, text[i]) + "'");
    }
  }
  return v;
}

BitVector BitVector::ones(std::size_t size) {
  BitVector v(size);
  std::fill(v.words_.begin(), v.words_.end(), ~word_type{0});
  v.clear_tail();
  return v;
}

bool BitVector::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](word_type w) { return w != 0; });
}

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (word_type w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitVector::find_first() const noexcept { return find_next(0); }

std::size_t BitVector::find_next(std::size_t from) const noexcept {
  if (from >= size_) return size_;
  std::size_t w = from / kWordBits;
  word_type cur = words_[w] & (~word_type{0} << (from % kWordBits));
  while (true) {
    if (cur != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
    if (++w == words_.size()) return size_;
    cur = words_[w];
  }
}

BitVector BitVector::slice(std::size_t offset, std::size_t length) const {
  assert(offset + length <= size_);
  BitVector out(length);
  if (offset % kWordBits == 0) {
    const std::size_t first = offset / kWordBits;
    std::copy_n(words_.begin() + static_cast<std::ptrdiff_t>(first), out.words_.size(), out.words_.begin());
    out.clear_tail();
    return out;
  }
  const unsigned shift = offset % kWordBits;
  for (std::size_t w = 0; w < out.words_.size(); ++w) {
    const std::size_t src = offset / kWordBits + w;
    word_type value = words_[src] >> shift;
    if (src + 1 < words_.size()) value |= words_[src + 1] << (kWordBits - shift);
    out.words_[w] = value;
  }
  out.clear_tail();
  return out;
}

void BitVector::assign_range(std::size_t offset, const BitVector& src) {
  assert(offset + src.size_ <= size_);
  if (offset % kWordBits == 0) {
    const std::size_t first = offset / kWordBits;
    const std::size_t full = src.size_ / kWordBits;
    std::copy_n(src.words_.begin(), full, words_.begin() + static_cast<std::ptrdiff_t>(first));
    for (std::size_t i = full * kWordBits; i < src.size_; ++i) set(offset + i, src.test(i));
    return;
  }
  for (std::size_t i = 0; i < src.size_; ++i) set(offset + i, src.test(i));
}

void BitVector::append(const BitVector& tail) {
  const std::size_t old = size_;
  size_ += tail.size_;
  words_.resize(word_count(size_), 0);
  assign_range(old, tail);
}

bool BitVector::is_submask_of(const BitVector& other) const noexcept {
  if (size_ != other.size_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool BitVector::intersects(const BitVector& other) const noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

BitVector& BitVector::operator|=(const BitVector& rhs) noexcept {
  assert(size_ == rhs.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= rhs.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& rhs) noexcept {
  assert(size_ == rhs.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= rhs.words_[i];
  return *this;
}

BitVector& BitVector::operator^=(const BitVector& rhs) noexcept {
  assert(size_ == rhs.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= rhs.words_[i];
  return *this;
}

BitVector& BitVector::subtract(const BitVector& rhs) noexcept {
  assert(size_ == rhs.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~rhs.words_[i];
  return *this;
}

BitVector BitVector::operator~() const {
  BitVector out(*this);
  for (auto& w : out.words_) w = ~w;
  out.clear_tail();
  return out;
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) noexcept {
  const std::size_t n = std::min(a.words_.size(), b.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    BitVector::word_type diff = a.words_[i] ^ b.words_[i];
    if (diff == 0) continue;
    const std::size_t bit = i * BitVector::kWordBits + static_cast<std::size_t>(std::countr_zero(diff));
    // A difference past the shorter length is an artefact of zero padding.
    if (bit >= std::min(a.size_, b.size_)) break;
    return a.test(bit) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return a.size_ <=> b.size_;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = find_first(); i < size_; i = find_next(i + 1)) s[i] = '1';
  return s;
}

std::size_t BitVector::hash() const noexcept {
  std::size_t h = std::hash<std::size_t>{}(size_);
  for (word_type w : words_) {
    h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void BitVector::clear_tail() noexcept {
  const std::size_t rem = size_ % kWordBits;
  if (rem != 0 && !words_.empty()) words_.back() &= (word_type{1} << rem) - 1;
}

}  // namespace blocklang
