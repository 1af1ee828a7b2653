#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "blocklang/blockcore.hpp"

namespace blocklang {

using StateId = std::uint32_t;

struct Transition {
  StateId from;
  Symbol symbol;
  StateId to;

  friend bool operator==(const Transition&, const Transition&) = default;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Acyclic automaton for a block language. Every state carries a rank (the
/// length of the words it accepts) and every transition steps from rank i to
/// rank i-1. Initial states live on rank ell, final states on rank 0.
///
/// Covers both the deterministic and nondeterministic case; minimal DFAs are
/// stored trim, with the sink left implicit.
class RankedAutomaton {
 public:
  explicit RankedAutomaton(const BlockParams& params) : params_(params) {}

  /// Throws NotRanked if rank > ell, or if an initial state is not on rank ell
  /// or a final state not on rank 0.
  StateId add_state(std::uint32_t rank, bool initial = false, bool final = false);
  /// Throws BadSymbol or NotRanked. Duplicate transitions are ignored.
  void add_transition(StateId from, Symbol symbol, StateId to);

  const BlockParams& params() const noexcept { return params_; }
  std::size_t num_states() const noexcept { return states_.size(); }
  std::size_t num_transitions() const noexcept;

  std::uint32_t rank(StateId q) const { return states_.at(q).rank; }
  bool is_initial(StateId q) const { return states_.at(q).initial; }
  bool is_final(StateId q) const { return states_.at(q).final; }
  std::vector<StateId> initial_states() const;
  std::vector<StateId> final_states() const;
  /// Sorted successor list.
  const std::vector<StateId>& successors(StateId q, Symbol symbol) const { return states_.at(q).next.at(symbol); }
  /// All transitions in (from, symbol, to) order.
  std::vector<Transition> transitions() const;

  /// Exactly one initial state and at most one successor per (state, symbol).
  bool is_deterministic() const;
  bool accepts(const Word& w) const;

 private:
  struct State {
    std::uint32_t rank;
    bool initial;
    bool final;
    std::vector<std::vector<StateId>> next;
  };

  BlockParams params_;
  std::vector<State> states_;
};

/// Automaton over a k-letter alphabet with a single initial state; may be
/// cyclic and nondeterministic. Produced by star, plus, stencil and
/// complement, whose languages are not block languages.
class GeneralAutomaton {
 public:
  explicit GeneralAutomaton(std::uint32_t k) : k_(k) {}

  StateId add_state(bool final = false);
  void set_initial(StateId q) { initial_ = q; }
  void set_final(StateId q, bool final = true) { states_.at(q).final = final; }
  void add_transition(StateId from, Symbol symbol, StateId to);

  std::uint32_t k() const noexcept { return k_; }
  std::size_t num_states() const noexcept { return states_.size(); }
  std::size_t num_transitions() const noexcept;
  StateId initial() const noexcept { return initial_; }
  bool is_final(StateId q) const { return states_.at(q).final; }
  const std::vector<StateId>& successors(StateId q, Symbol symbol) const { return states_.at(q).next.at(symbol); }
  std::vector<Transition> transitions() const;

  bool is_deterministic() const;
  /// Deterministic with a successor for every (state, symbol).
  bool is_complete() const;
  bool accepts(const Word& w) const;

 private:
  struct State {
    bool final;
    std::vector<std::vector<StateId>> next;
  };

  std::uint32_t k_;
  StateId initial_ = 0;
  std::vector<State> states_;
};

struct WidthProfile {
  /// widths[i] is the number of trim states of rank i.
  std::vector<std::uint64_t> widths;
  /// The automaton is deterministic, so its complete form has a sink.
  bool has_sink = false;

  std::uint64_t total() const noexcept;
};

/// Subset construction restricted to reachable, non-empty subsets.
RankedAutomaton determinize(const RankedAutomaton& a);
GeneralAutomaton determinize(const GeneralAutomaton& a);

/// Keeps only states on a path from an initial to a final state. The result
/// may have no states at all.
RankedAutomaton trim(const RankedAutomaton& a);

/// Renumbers states by rank (descending), then by right language so that the
/// state accepting the lexicographically least word comes first.
RankedAutomaton canonicalize(const RankedAutomaton& a);

/// Same language as a general automaton. Several initial states are merged
/// into one fresh initial state.
GeneralAutomaton to_general(const RankedAutomaton& a);

/// Adds a sink if any transition is missing. Throws NotDeterministic.
GeneralAutomaton complete(const GeneralAutomaton& a);

/// Minimal complete DFA by partition refinement; states are numbered in
/// breadth-first order from the initial state. Missing transitions are read
/// as going to a sink. Throws NotDeterministic.
GeneralAutomaton minimize_dfa(const GeneralAutomaton& a);

/// Language equality, decided by comparing canonical minimal DFAs.
/// Throws ParamsMismatch when the alphabets differ.
bool equivalent(const GeneralAutomaton& a, const GeneralAutomaton& b);
bool equivalent(const RankedAutomaton& a, const RankedAutomaton& b);

/// Bitmap of each state's right language; a rank-r state gets k^r bits.
std::vector<BitVector> right_languages(const RankedAutomaton& a);

WidthProfile width_profile(const RankedAutomaton& a);

/// States of the minimal complete DFA, sink included.
std::uint64_t dsc(const GeneralAutomaton& a);
std::uint64_t dsc(const RankedAutomaton& a);
/// States of the trimmed automaton (no sink).
std::uint64_t nsc_upper(const RankedAutomaton& a);

}  // namespace blocklang
