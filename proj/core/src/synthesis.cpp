#include "blocklang/synthesis.hpp"

#include <future>
#include <unordered_set>

#include "blocklang/error.hpp"

namespace blocklang {

namespace {

void require_nonempty(const Bitmap& b) {
  if (b.empty_language()) throw Error(ErrorCode::EmptyLanguage, "bitmap accepts no word");
}

CoverSolution solve_rank(const CoverInstance& inst, const NfaOptions& options) {
  if (options.solver == CoverStrategy::Greedy) return greedy_cover(inst);
  try {
    return min_cover(inst, options.budget);
  } catch (const CoverBudgetExceeded& e) {
    return e.best();
  }
}

}  // namespace

RankedAutomaton bitmap_to_min_dfa(const Bitmap& b) {
  require_nonempty(b);
  const BlockParams& p = b.params();
  const std::vector<SegmentSet> sets = all_segment_sets(b);
  RankedAutomaton a(p);
  // first state id of each level
  std::vector<StateId> base(p.ell() + 1, 0);
  for (std::uint32_t i = p.ell() + 1; i-- > 0;) {
    base[i] = static_cast<StateId>(a.num_states());
    for (std::size_t m = 0; m < sets[i].size(); ++m) a.add_state(i, i == p.ell(), i == 0);
  }
  for (std::uint32_t i = p.ell(); i >= 1; --i) {
    const std::uint64_t width = p.power(i - 1);
    for (std::size_t m = 0; m < sets[i].size(); ++m) {
      const BitVector& s = sets[i].members[m];
      for (Symbol j = 0; j < p.k(); ++j) {
        BitVector block = s.slice(j * width, width);
        if (block.none()) continue;
        const std::size_t target = sets[i - 1].find(block);
        a.add_transition(base[i] + static_cast<StateId>(m), j, base[i - 1] + static_cast<StateId>(target));
      }
    }
  }
  return a;
}

Bitmap automaton_to_bitmap(const RankedAutomaton& a) {
  const std::vector<BitVector> lang = right_languages(a);
  BitVector bits(a.params().universe_size());
  for (StateId q : a.initial_states()) bits |= lang[q];
  return Bitmap(a.params(), std::move(bits));
}

CoverInstance rank_cover_instance(const Bitmap& b, const std::vector<SegmentSet>& segments, std::uint32_t level) {
  const BlockParams& p = b.params();
  if (level == 0 || level > p.ell()) throw Error(ErrorCode::IndexOutOfRange, "cover level outside 1..ell");
  const SegmentSet& targets = segments.at(level);
  const SegmentSet& lower = segments.at(level - 1);
  const std::uint64_t width = p.power(level - 1);
  const BitVector zero(width);

  std::unordered_set<BitVector> seen;
  std::vector<BitVector> candidates;
  for (const BitVector& t : targets.members) {
    // per block, the lower segments (and the zero block) that fit under t
    std::vector<std::vector<const BitVector*>> options(p.k());
    for (Symbol j = 0; j < p.k(); ++j) {
      const BitVector block = t.slice(j * width, width);
      options[j].push_back(&zero);
      for (const BitVector& s : lower.members)
        if (s.is_submask_of(block)) options[j].push_back(&s);
    }
    std::vector<std::size_t> pick(p.k(), 0);
    while (true) {
      BitVector c(width * p.k());
      for (Symbol j = 0; j < p.k(); ++j) c.assign_range(j * width, *options[j][pick[j]]);
      if (c.any() && seen.insert(c).second) candidates.push_back(std::move(c));
      std::size_t j = p.k();
      while (j-- > 0) {
        if (++pick[j] < options[j].size()) break;
        pick[j] = 0;
      }
      if (j == static_cast<std::size_t>(-1)) break;
    }
  }
  return make_cover_instance(width * p.k(), targets.members, std::move(candidates));
}

NfaResult bitmap_to_min_nfa(const Bitmap& b, const NfaOptions& options) {
  require_nonempty(b);
  const BlockParams& p = b.params();
  const std::vector<SegmentSet> sets = all_segment_sets(b);

  std::vector<CoverSolution> covers(p.ell() + 1);
  covers[0].elements = sets[0].members;
  covers[0].selection = {{0}};
  covers[0].certified_minimal = true;

  auto solve = [&](std::uint32_t i) { return solve_rank(rank_cover_instance(b, sets, i), options); };
  if (options.parallel) {
    std::vector<std::future<CoverSolution>> jobs;
    for (std::uint32_t i = 1; i <= p.ell(); ++i) jobs.push_back(std::async(std::launch::async, solve, i));
    for (std::uint32_t i = 1; i <= p.ell(); ++i) covers[i] = jobs[i - 1].get();
  } else {
    for (std::uint32_t i = 1; i <= p.ell(); ++i) covers[i] = solve(i);
  }

  RankedAutomaton a(p);
  std::vector<StateId> base(p.ell() + 1, 0);
  for (std::uint32_t i = p.ell() + 1; i-- > 0;) {
    base[i] = static_cast<StateId>(a.num_states());
    for (std::size_t m = 0; m < covers[i].size(); ++m) a.add_state(i, i == p.ell(), i == 0);
  }
  for (std::uint32_t i = p.ell(); i >= 1; --i) {
    const std::uint64_t width = p.power(i - 1);
    for (std::size_t m = 0; m < covers[i].size(); ++m) {
      const BitVector& c = covers[i].elements[m];
      for (Symbol j = 0; j < p.k(); ++j) {
        const BitVector block = c.slice(j * width, width);
        if (block.none()) continue;
        const std::size_t target = sets[i - 1].find(block);
        for (std::size_t e : covers[i - 1].selection.at(target)) {
          a.add_transition(base[i] + static_cast<StateId>(m), j, base[i - 1] + static_cast<StateId>(e));
        }
      }
    }
  }

  NfaResult result{trim(a), true, std::move(covers)};
  for (const CoverSolution& c : result.covers) result.certified = result.certified && c.certified_minimal;
  return result;
}

}  // namespace blocklang
