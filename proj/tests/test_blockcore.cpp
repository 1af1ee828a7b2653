#include <gtest/gtest.h>

#include <random>

#include "blocklang/blockcore.hpp"
#include "blocklang/error.hpp"
#include "oracles.hpp"

using namespace blocklang;

namespace {

const BlockParams k2l4(2, 4);
const char* const kExample = "1011011100011110";

Word w(std::string_view s, std::uint32_t k = 2) { return parse_word(s, k); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Parse;
}

}  // namespace

TEST(BlockParams, RejectsDegenerateAndHugeShapes) {
  EXPECT_EQ(code_of([] { BlockParams(0, 3); }), ErrorCode::BadParams);
  EXPECT_EQ(code_of([] { BlockParams(2, 0); }), ErrorCode::BadParams);
  EXPECT_EQ(code_of([] { BlockParams(2, 41); }), ErrorCode::ParamsTooLarge);
  EXPECT_EQ(BlockParams(2, 40).universe_size(), std::uint64_t{1} << 40);
  EXPECT_EQ(BlockParams(1, 7).universe_size(), 1u);
}

TEST(WordIndex, KnownValues) {
  EXPECT_EQ(word_to_index(w("abba"), k2l4), 6u);
  EXPECT_EQ(word_to_index(w("aaaa"), k2l4), 0u);
  EXPECT_EQ(word_to_index(w("cb", 3), BlockParams(3, 2)), 7u);
  EXPECT_EQ(render_word(index_to_word(6, k2l4), 2), "abba");
  EXPECT_EQ(render_word(index_to_word(15, k2l4), 2), "bbbb");
  EXPECT_EQ(render_word(index_to_word(0, BlockParams(1, 3)), 1), "aaa");
}

TEST(WordIndex, Errors) {
  EXPECT_EQ(code_of([] { word_to_index(w("abb"), k2l4); }), ErrorCode::WrongLength);
  EXPECT_EQ(code_of([] { word_to_index(Word{{0, 0, 2, 0}}, k2l4); }), ErrorCode::BadSymbol);
  EXPECT_EQ(code_of([] { index_to_word(16, k2l4); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { parse_word("abz", 2); }), ErrorCode::BadSymbol);
}

TEST(WordIndex, MutuallyInverse) {
  for (auto [k, ell] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 5}, {3, 3}, {5, 2}, {1, 4}}) {
    const BlockParams p(k, ell);
    const auto words = oracle::all_words(k, ell);
    for (std::uint64_t i = 0; i < p.universe_size(); ++i) {
      const Word x = index_to_word(i, p);
      EXPECT_EQ(render_word(x, k), words[i]);
      EXPECT_EQ(word_to_index(x, p), i);
    }
  }
}

TEST(WordRendering, LargeAlphabetUsesDottedIndices) {
  const Word x{{0, 27, 3}};
  EXPECT_EQ(render_word(x, 30), "0.27.3");
  EXPECT_EQ(parse_word("0.27.3", 30), x);
}

TEST(Bitmap, FromWordsAndBack) {
  const std::vector<std::string> lang{"aaaa", "aaba", "aabb", "abab", "abba",
                                      "abbb", "babb", "bbaa", "bbab", "bbba"};
  std::vector<Word> words;
  for (const auto& s : lang) words.push_back(w(s));
  const Bitmap b = bitmap_from_words(words, k2l4);
  EXPECT_EQ(b.to_string(), kExample);
  std::vector<std::string> back;
  for (const Word& x : words_from_bitmap(b)) back.push_back(render_word(x, 2));
  std::vector<std::string> expected(lang);
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(back, expected);

  EXPECT_EQ(bitmap_from_words({}, BlockParams(2, 2)).to_string(), "0000");
  EXPECT_EQ(bitmap_from_words({w("aa"), w("ab"), w("ba"), w("bb")}, BlockParams(2, 2)).to_string(), "1111");
  EXPECT_TRUE(words_from_bitmap(Bitmap::from_string(BlockParams(2, 2), "0000")).empty());
  EXPECT_EQ(words_from_bitmap(Bitmap::from_string(BlockParams(2, 1), "10")).size(), 1u);
}

TEST(Bitmap, LengthIsChecked) {
  EXPECT_EQ(code_of([] { Bitmap::from_string(k2l4, "101"); }), ErrorCode::WrongLength);
  EXPECT_EQ(code_of([] { Bitmap::from_string(k2l4, "10110111000111x0"); }), ErrorCode::Parse);
}

TEST(Segments, ExampleValues) {
  const Bitmap b = Bitmap::from_string(k2l4, kExample);
  EXPECT_EQ(segment(b, 1, 4).bits.to_string(), "00");
  EXPECT_EQ(segment(b, 2, 1).bits.to_string(), "0111");
  EXPECT_EQ(segment(b, 4, 0).bits.to_string(), kExample);
  EXPECT_EQ(code_of([&] { segment(b, 2, 4); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { segment(b, 5, 0); }), ErrorCode::IndexOutOfRange);
}

TEST(Segments, SetsOfExample) {
  const Bitmap b = Bitmap::from_string(k2l4, kExample);
  auto strings = [&](std::uint32_t i) {
    std::set<std::string> out;
    for (const auto& m : segment_set(b, i).members) out.insert(m.to_string());
    return out;
  };
  EXPECT_EQ(strings(1), (std::set<std::string>{"10", "11", "01"}));
  EXPECT_EQ(strings(2), (std::set<std::string>{"1011", "0111", "0001", "1110"}));
  EXPECT_EQ(strings(3), (std::set<std::string>{"10110111", "00011110"}));
  EXPECT_EQ(strings(0), (std::set<std::string>{"1"}));
  EXPECT_TRUE(segment_set(Bitmap::from_string(BlockParams(2, 2), "0000"), 1).members.empty());
}

TEST(Segments, CanonicalOrderIsByLeastWord) {
  const Bitmap b = Bitmap::from_string(k2l4, kExample);
  const auto& m = segment_set(b, 2).members;
  std::vector<std::string> got;
  for (const auto& s : m) got.push_back(s.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"1110", "1011", "0111", "0001"}));
}

TEST(Quotient, ExampleValues) {
  const Bitmap b = Bitmap::from_string(k2l4, kExample);
  EXPECT_EQ(quotient_bitmap(b, w("aa")).to_string(), "1011");
  EXPECT_EQ(quotient_bitmap(b, w("b")).to_string(), "00011110");
  EXPECT_EQ(quotient_bitmap(b, Word{}).to_string(), kExample);
  EXPECT_EQ(quotient_bitmap(b, w("abba")).to_string(), "1");
  EXPECT_EQ(quotient_bitmap(b, w("abba")).params().ell(), 0u);
  EXPECT_EQ(code_of([&] { quotient_bitmap(b, w("aaaaa")); }), ErrorCode::WrongLength);
}

TEST(Properties, SegmentsReassembleAndQuotientsMatchOracle) {
  std::mt19937_64 rng(7);
  for (auto [k, ell] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {2, 5}, {3, 2}, {3, 3}}) {
    const BlockParams p(k, ell);
    for (int trial = 0; trial < 20; ++trial) {
      std::string bits;
      for (std::uint64_t i = 0; i < p.universe_size(); ++i) bits.push_back(rng() % 2 ? '1' : '0');
      const Bitmap b = Bitmap::from_string(p, bits);
      const auto lang = oracle::language_of(bits, k, ell);
      for (std::uint32_t i = 0; i <= ell; ++i) {
        std::string joined;
        for (std::uint64_t j = 0; j < p.power(ell - i); ++j) joined += segment(b, i, j).bits.to_string();
        EXPECT_EQ(joined, bits);
        EXPECT_LE(segment_set(b, i).size(), std::min<std::uint64_t>(p.power(ell - i),
                                                                     p.power(i) >= 63 ? UINT64_MAX : (std::uint64_t{1} << p.power(i)) - 1));
      }
      for (std::uint32_t len = 0; len <= ell; ++len) {
        for (const auto& prefix : oracle::all_words(k, len)) {
          oracle::Language expected;
          for (const auto& x : lang)
            if (x.compare(0, len, prefix) == 0) expected.insert(x.substr(len));
          const Bitmap q = quotient_bitmap(b, parse_word(prefix, k));
          EXPECT_EQ(oracle::language_of(q.to_string(), k, ell - len), expected);
        }
      }
    }
  }
}
