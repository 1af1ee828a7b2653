#include "blocklang/blockcore.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include "blocklang/error.hpp"

namespace blocklang {

std::uint64_t checked_power(std::uint64_t k, std::uint64_t e) noexcept {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (k != 0 && result > kUniverseCap / k) return 0;
    result *= k;
  }
  return result > kUniverseCap ? 0 : result;
}

BlockParams::BlockParams(std::uint32_t k, std::uint32_t ell) : BlockParams(k, ell, false) {}

BlockParams BlockParams::with_residual_length(std::uint32_t k, std::uint32_t ell) {
  return BlockParams(k, ell, true);
}

BlockParams::BlockParams(std::uint32_t k, std::uint32_t ell, bool allow_empty_block) : k_(k), ell_(ell) {
  if (k == 0) throw Error(ErrorCode::BadParams, "alphabet size must be at least 1");
  if (ell == 0 && !allow_empty_block) throw Error(ErrorCode::BadParams, "block length must be at least 1");
  universe_ = checked_power(k, ell);
  if (universe_ == 0) {
    throw Error(ErrorCode::ParamsTooLarge,
                "k^ell exceeds 2^40 for k=" + std::to_string(k) + ", ell=" + std::to_string(ell));
  }
}

std::uint64_t BlockParams::power(std::uint32_t i) const noexcept {
  std::uint64_t r = 1;
  for (std::uint32_t j = 0; j < i; ++j) r *= k_;
  return r;
}

std::string render_word(const Word& w, std::uint32_t k) {
  std::string out;
  if (k <= 26) {
    for (Symbol s : w.symbols) out.push_back(static_cast<char>('a' + s));
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) out.push_back('.');
    out += std::to_string(w.symbols[i]);
  }
  return out;
}

Word parse_word(std::string_view text, std::uint32_t k) {
  Word w;
  if (text.empty()) return w;
  if (k <= 26) {
    for (char c : text) {
      if (c < 'a' || c > 'z') throw Error(ErrorCode::Parse, "word contains '" + std::string(1, c) + "'");
      const auto s = static_cast<Symbol>(c - 'a');
      if (s >= k) throw Error(ErrorCode::BadSymbol, "symbol '" + std::string(1, c) + "' outside alphabet");
      w.symbols.push_back(s);
    }
    return w;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t dot = std::min(text.find('.', pos), text.size());
    Symbol s = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + dot, s);
    if (ec != std::errc{} || ptr != text.data() + dot) throw Error(ErrorCode::Parse, "bad symbol index in word");
    if (s >= k) throw Error(ErrorCode::BadSymbol, "symbol index " + std::to_string(s) + " outside alphabet");
    w.symbols.push_back(s);
    pos = dot + 1;
  }
  return w;
}

Word reversed(const Word& w) {
  Word r = w;
  std::reverse(r.symbols.begin(), r.symbols.end());
  return r;
}

namespace {

std::uint64_t index_of_prefix(const Word& w, std::uint32_t k) {
  std::uint64_t index = 0;
  for (Symbol s : w.symbols) {
    if (s >= k) throw Error(ErrorCode::BadSymbol, "symbol index " + std::to_string(s) + " >= k");
    index = index * k + s;
  }
  return index;
}

}  // namespace

std::uint64_t word_to_index(const Word& w, const BlockParams& p) {
  if (w.size() != p.ell()) {
    throw Error(ErrorCode::WrongLength,
                "word of length " + std::to_string(w.size()) + ", expected " + std::to_string(p.ell()));
  }
  return index_of_prefix(w, p.k());
}

Word index_to_word(std::uint64_t index, const BlockParams& p) {
  if (index >= p.universe_size()) {
    throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(index) + " outside Sigma^ell");
  }
  Word w;
  w.symbols.assign(p.ell(), 0);
  for (std::uint32_t i = p.ell(); i-- > 0;) {
    w.symbols[i] = static_cast<Symbol>(index % p.k());
    index /= p.k();
  }
  return w;
}

Bitmap::Bitmap(const BlockParams& params) : params_(params), bits_(params.universe_size()) {}

Bitmap::Bitmap(const BlockParams& params, BitVector bits) : params_(params), bits_(std::move(bits)) {
  if (bits_.size() != params_.universe_size()) {
    throw Error(ErrorCode::WrongLength, "bitmap has " + std::to_string(bits_.size()) + " bits, expected " +
                                            std::to_string(params_.universe_size()));
  }
}

Bitmap Bitmap::from_string(const BlockParams& params, std::string_view text) {
  return Bitmap(params, BitVector::from_string(text));
}

std::size_t SegmentSet::find(const BitVector& s) const {
  const auto it = std::lower_bound(members.begin(), members.end(), s, DescendingBits{});
  if (it != members.end() && *it == s) return static_cast<std::size_t>(it - members.begin());
  return members.size();
}

Bitmap bitmap_from_words(const std::vector<Word>& words, const BlockParams& p) {
  BitVector bits(p.universe_size());
  for (const Word& w : words) bits.set(word_to_index(w, p));
  return Bitmap(p, std::move(bits));
}

std::vector<Word> words_from_bitmap(const Bitmap& b) {
  std::vector<Word> out;
  const BitVector& bits = b.bits();
  for (std::size_t i = bits.find_first(); i < bits.size(); i = bits.find_next(i + 1)) {
    out.push_back(index_to_word(i, b.params()));
  }
  return out;
}

Segment segment(const Bitmap& b, std::uint32_t level, std::uint64_t index) {
  const BlockParams& p = b.params();
  if (level > p.ell()) throw Error(ErrorCode::IndexOutOfRange, "segment level above block length");
  const std::uint64_t width = p.power(level);
  if (index >= p.power(p.ell() - level)) throw Error(ErrorCode::IndexOutOfRange, "segment index out of range");
  return Segment{level, index, b.bits().slice(index * width, width)};
}

Bitmap quotient_bitmap(const Bitmap& b, const Word& w) {
  const BlockParams& p = b.params();
  if (w.size() > p.ell()) throw Error(ErrorCode::WrongLength, "quotient word longer than block length");
  const auto level = static_cast<std::uint32_t>(p.ell() - w.size());
  const std::uint64_t j = index_of_prefix(w, p.k());
  return Bitmap(BlockParams::with_residual_length(p.k(), level), segment(b, level, j).bits);
}

SegmentSet segment_set(const Bitmap& b, std::uint32_t level) {
  const BlockParams& p = b.params();
  if (level > p.ell()) throw Error(ErrorCode::IndexOutOfRange, "segment level above block length");
  const std::uint64_t width = p.power(level);
  const std::uint64_t count = p.power(p.ell() - level);
  SegmentSet out;
  out.level = level;
  std::unordered_set<BitVector> seen;
  for (std::uint64_t j = 0; j < count; ++j) {
    BitVector s = b.bits().slice(j * width, width);
    if (s.none()) continue;
    if (seen.insert(s).second) out.members.push_back(std::move(s));
  }
  std::sort(out.members.begin(), out.members.end(), DescendingBits{});
  return out;
}

std::vector<SegmentSet> all_segment_sets(const Bitmap& b) {
  std::vector<SegmentSet> sets;
  sets.reserve(b.params().ell() + 1);
  for (std::uint32_t i = 0; i <= b.params().ell(); ++i) sets.push_back(segment_set(b, i));
  return sets;
}

}  // namespace blocklang
