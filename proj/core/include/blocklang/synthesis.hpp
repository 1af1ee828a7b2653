#pragma once

#include <cstdint>
#include <vector>

#include "blocklang/automata.hpp"
#include "blocklang/blockcore.hpp"
#include "blocklang/cover.hpp"

namespace blocklang {

/// Minimal DFA, stored trim: rank-i states are the distinct non-zero
/// segments of length k^i, in canonical order. Throws EmptyLanguage.
RankedAutomaton bitmap_to_min_dfa(const Bitmap& b);

/// Language of a ranked DFA or NFA as a bitmap.
Bitmap automaton_to_bitmap(const RankedAutomaton& a);

enum class CoverStrategy { Exact, Greedy };

struct NfaOptions {
  CoverStrategy solver = CoverStrategy::Exact;
  /// Search nodes per rank.
  std::uint64_t budget = kDefaultCoverBudget;
  /// Solve the per-rank covers on separate threads.
  bool parallel = false;
};

struct NfaResult {
  RankedAutomaton automaton;
  /// Every rank cover was proved minimal.
  bool certified = false;
  /// covers[i] covers the rank-i segments; covers[0] is the trivial {1}.
  std::vector<CoverSolution> covers;
};

/// Minimal NFA from per-rank minimal covers. Ranks whose exact search runs
/// out of budget fall back to the greedy cover and clear `certified`.
/// Throws EmptyLanguage.
NfaResult bitmap_to_min_nfa(const Bitmap& b, const NfaOptions& options = {});

/// Cover instance for rank i >= 1: targets are the rank-i segments,
/// candidates the non-zero submasks assembled from rank-(i-1) segments and
/// zero blocks.
CoverInstance rank_cover_instance(const Bitmap& b, const std::vector<SegmentSet>& segments, std::uint32_t level);

}  // namespace blocklang
