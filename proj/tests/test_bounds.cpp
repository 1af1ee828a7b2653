#include <gtest/gtest.h>

#include <random>

#include "blocklang/automata.hpp"
#include "blocklang/bounds.hpp"
#include "blocklang/error.hpp"
#include "blocklang/synthesis.hpp"
#include "blocklang/witness.hpp"

using namespace blocklang;

namespace {

std::string bits_of(std::uint64_t v, std::uint64_t n) {
  std::string s;
  for (std::uint64_t i = 0; i < n; ++i) s.push_back((v >> i) & 1 ? '1' : '0');
  return s;
}

std::uint32_t floor_log(std::uint32_t k, std::uint32_t x) {
  std::uint32_t r = 0;
  for (std::uint64_t p = k; p <= x; p *= k) ++r;
  return r;
}

}  // namespace

TEST(DfaBound, KnownValues) {
  const DfaBound b5 = campeanu_ho_bound(2, 5);
  EXPECT_EQ(b5.value, 20);
  EXPECT_EQ(b5.r, 2u);
  EXPECT_EQ(campeanu_ho_bound(2, 1).value, 3);
  const DfaBound b10 = campeanu_ho_bound(2, 10);
  EXPECT_EQ(b10.r, 3u);
  EXPECT_EQ(b10.value, 275);
  EXPECT_THROW(campeanu_ho_bound(1, 4), Error);
  EXPECT_GT(campeanu_ho_bound(5, 200).value, BigInt(1) << 400);
}

TEST(DfaBound, ExhaustiveSmallShapes) {
  for (std::uint32_t ell = 1; ell <= 3; ++ell) {
    const BlockParams p(2, ell);
    std::uint64_t best = 0;
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << p.universe_size()); ++v)
      best = std::max(best, dsc(bitmap_to_min_dfa(Bitmap::from_string(p, bits_of(v, p.universe_size())))));
    EXPECT_EQ(BigInt(best), campeanu_ho_bound(2, ell).value) << ell;
  }
}

TEST(DfaBound, RankStaysNearLog) {
  for (std::uint32_t k = 2; k <= 5; ++k)
    for (std::uint32_t ell = 1; ell <= 20; ++ell) {
      const std::uint32_t r = campeanu_ho_bound(k, ell).r;
      const std::uint32_t lg = floor_log(k, ell);
      EXPECT_GE(r, lg) << k << " " << ell;
      EXPECT_LE(r, lg + 2) << k << " " << ell;
    }
}

TEST(NfaBound, KnownValues) {
  EXPECT_EQ(nfa_max_size(2, 4), 10);
  EXPECT_EQ(nfa_max_size(2, 3), 6);
  EXPECT_EQ(nfa_max_size(3, 2), 5);
  EXPECT_EQ(nfa_max_size(2, 1), 2);
}

TEST(WidthBounds, KnownValues) {
  const WidthBound w = width_bounds(2, 4, 2);
  EXPECT_EQ(w.dfa_max, 4);
  EXPECT_EQ(w.nfa_max, 4);
  EXPECT_EQ(width_bounds(2, 4, 0).dfa_max, 1);
  EXPECT_EQ(width_bounds(2, 4, 0).nfa_max, 1);
  EXPECT_EQ(width_bounds(2, 4, 4).dfa_max, 1);
  EXPECT_EQ(width_bounds(2, 4, 4).nfa_max, 1);
  EXPECT_EQ(width_bounds(2, 10, 2).dfa_max, 15);
}

TEST(Envelope, SampledBitmapsRespectAllBounds) {
  std::mt19937_64 rng(17);
  for (std::uint32_t ell = 4; ell <= 6; ++ell) {
    const BlockParams p(2, ell);
    for (int trial = 0; trial < 15; ++trial) {
      std::string bits;
      for (std::uint64_t i = 0; i < p.universe_size(); ++i) bits.push_back(rng() % 2 ? '1' : '0');
      if (bits.find('1') == std::string::npos) continue;
      const RankedAutomaton dfa = bitmap_to_min_dfa(Bitmap::from_string(p, bits));
      EXPECT_LE(BigInt(dsc(dfa)), campeanu_ho_bound(2, ell).value);
      const auto widths = width_profile(dfa).widths;
      for (std::uint32_t i = 0; i <= ell; ++i) EXPECT_LE(BigInt(widths[i]), width_bounds(2, ell, i).dfa_max);
      if (ell <= 5) {
        const NfaResult n = bitmap_to_min_nfa(Bitmap::from_string(p, bits));
        if (!n.certified) continue;
        EXPECT_LE(BigInt(n.automaton.num_states()), nfa_max_size(2, ell));
        const auto nw = width_profile(n.automaton).widths;
        for (std::uint32_t i = 0; i <= ell; ++i) EXPECT_LE(BigInt(nw[i]), width_bounds(2, ell, i).nfa_max);
      }
    }
  }
}

TEST(BoundOps, NamesRoundTrip) {
  for (BoundOp op : {BoundOp::Union, BoundOp::Intersection, BoundOp::AddWord, BoundOp::RemoveWord,
                     BoundOp::Concatenation, BoundOp::BlockComplement, BoundOp::Reversal, BoundOp::Star,
                     BoundOp::Plus, BoundOp::Stencil, BoundOp::Complement})
    EXPECT_EQ(parse_bound_op(to_string(op)), op);
  EXPECT_THROW(parse_bound_op("xor"), Error);
  EXPECT_EQ(arity(BoundOp::Union), 2u);
  EXPECT_EQ(arity(BoundOp::Star), 1u);
}

TEST(CheckOperationBounds, TightWitnesses) {
  const std::vector<Bitmap> uni{simple_witness("ac-power", 3, 4), simple_witness("bc-power", 3, 4)};
  const BoundReport u = check_operation_bounds(BoundOp::Union, uni);
  EXPECT_EQ(u.observed, 12u);
  EXPECT_TRUE(u.satisfied);
  EXPECT_TRUE(u.tight);

  const std::vector<Bitmap> inter{half_match_witness(2, 3, 0), half_match_witness(2, 3, 1)};
  const BoundReport i = check_operation_bounds(BoundOp::Intersection, inter, std::nullopt, {.with_nfa = false});
  EXPECT_EQ(i.observed, 23u);
  EXPECT_EQ(i.formula, 23);
  EXPECT_TRUE(i.tight);

  const std::vector<Bitmap> full{simple_witness("full", 2, 4)};
  const BoundReport r = check_operation_bounds(BoundOp::RemoveWord, full, parse_word("aaaa", 2));
  EXPECT_EQ(r.observed, 9u);
  EXPECT_EQ(r.formula, 9);
  EXPECT_TRUE(r.satisfied);
  EXPECT_TRUE(r.tight);
  ASSERT_TRUE(r.nfa.has_value());
  EXPECT_TRUE(r.nfa->satisfied);

  EXPECT_THROW(check_operation_bounds(BoundOp::AddWord, full), Error);
  EXPECT_THROW(check_operation_bounds(BoundOp::Union, full), Error);
}

TEST(CheckOperationBounds, ConcatAndStarPlus) {
  const std::vector<Bitmap> unary{Bitmap::from_string(BlockParams(1, 2), "1"), Bitmap::from_string(BlockParams(1, 3), "1")};
  const BoundReport c = check_operation_bounds(BoundOp::Concatenation, unary);
  EXPECT_EQ(c.observed, 7u);
  EXPECT_TRUE(c.tight);

  const std::vector<Bitmap> ex{Bitmap::from_string(BlockParams(2, 4), "1011011100011110")};
  EXPECT_TRUE(check_operation_bounds(BoundOp::Star, ex).tight);
  EXPECT_TRUE(check_operation_bounds(BoundOp::Plus, ex).tight);
  const BoundReport st = check_operation_bounds(BoundOp::Stencil, ex);
  EXPECT_TRUE(st.satisfied);
  EXPECT_FALSE(st.tight);
  EXPECT_EQ(st.observed, 12u);
  EXPECT_EQ(st.formula, 15);
  EXPECT_TRUE(check_operation_bounds(BoundOp::Complement, ex).tight);
  EXPECT_TRUE(check_operation_bounds(BoundOp::BlockComplement, ex).satisfied);
}

TEST(FormatReport, TabSeparated) {
  const std::vector<Bitmap> full{simple_witness("full", 2, 4)};
  const std::string line = format_report(check_operation_bounds(BoundOp::RemoveWord, full, parse_word("aaaa", 2)));
  EXPECT_NE(line.find("\tobserved=9\t"), std::string::npos);
  EXPECT_NE(line.find("tight=yes"), std::string::npos);
  EXPECT_EQ(line.find('\n'), std::string::npos);
}

TEST(Table, AllRowsPassAndOrderIsStable) {
  const auto serial = run_table2(4, false);
  const auto parallel = run_table2(4, true);
  ASSERT_EQ(serial.size(), parallel.size());
  ASSERT_FALSE(serial.empty());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_TRUE(serial[i].ok()) << format_report(serial[i].report);
    EXPECT_EQ(format_report(serial[i].report), format_report(parallel[i].report));
  }
}
