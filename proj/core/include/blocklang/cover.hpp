#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "blocklang/bitvector.hpp"
#include "blocklang/error.hpp"

namespace blocklang {

inline constexpr std::uint64_t kDefaultCoverBudget = 10'000'000;

/// A set-basis instance: find few candidates such that every target is the
/// OR of some of them.
struct CoverInstance {
  std::size_t width = 0;
  std::vector<BitVector> targets;
  std::vector<BitVector> candidates;
};

/// Drops zero vectors and duplicates, keeps only candidates that are a
/// submask of some target and sorts both lists canonically. Throws
/// WidthMismatch when a vector has the wrong length.
CoverInstance make_cover_instance(std::size_t width, std::vector<BitVector> targets, std::vector<BitVector> candidates);

struct CoverSolution {
  /// Chosen vectors, canonical order.
  std::vector<BitVector> elements;
  /// selection[t] lists indices into elements whose OR is targets[t].
  std::vector<std::vector<std::size_t>> selection;
  bool certified_minimal = false;
  std::uint64_t nodes = 0;

  std::size_t size() const noexcept { return elements.size(); }
};

class CoverBudgetExceeded : public Error {
 public:
  CoverBudgetExceeded(std::uint64_t budget, CoverSolution best);
  /// Best cover known when the search stopped; never certified.
  const CoverSolution& best() const noexcept { return best_; }

 private:
  CoverSolution best_;
};

/// True iff some subset of elements ORs to target. Throws WidthMismatch.
bool is_cover(const std::vector<BitVector>& elements, const BitVector& target);

/// Smallest subset of elements (indices, ascending) whose OR equals target;
/// among equally small subsets the lexicographically least. Throws
/// Infeasible if there is none.
std::vector<std::size_t> select_subset(const std::vector<BitVector>& elements, const BitVector& target);

/// Exact minimum cover by iterative deepening. Budget counts search nodes.
/// Throws Infeasible, or CoverBudgetExceeded carrying a valid fallback.
CoverSolution min_cover(const CoverInstance& inst, std::uint64_t budget = kDefaultCoverBudget);

/// Largest-gain heuristic followed by removal of redundant elements.
CoverSolution greedy_cover(const CoverInstance& inst);

/// COV1 text form: `COV1 <width>`, then `target <bits>` and `cand <bits>` lines.
std::string write_cov1(const CoverInstance& inst);
CoverInstance parse_cov1(std::string_view text);

}  // namespace blocklang
