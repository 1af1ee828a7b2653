#include "blocklang/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "blocklang/error.hpp"

namespace blocklang {

namespace {

void insert_sorted(std::vector<StateId>& v, StateId q) {
  const auto it = std::lower_bound(v.begin(), v.end(), q);
  if (it == v.end() || *it != q) v.insert(it, q);
}

void check_symbol(Symbol s, std::uint32_t k) {
  if (s >= k) throw Error(ErrorCode::BadSymbol, "symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(k));
}

}  // namespace

StateId RankedAutomaton::add_state(std::uint32_t rank, bool initial, bool final) {
  if (rank > params_.ell()) throw Error(ErrorCode::NotRanked, "rank " + std::to_string(rank) + " above block length");
  if (initial && rank != params_.ell()) throw Error(ErrorCode::NotRanked, "initial state not on rank ell");
  if (final && rank != 0) throw Error(ErrorCode::NotRanked, "final state not on rank 0");
  states_.push_back(State{rank, initial, final, std::vector<std::vector<StateId>>(params_.k())});
  return static_cast<StateId>(states_.size() - 1);
}

void RankedAutomaton::add_transition(StateId from, Symbol symbol, StateId to) {
  check_symbol(symbol, params_.k());
  if (from >= states_.size() || to >= states_.size()) throw Error(ErrorCode::IndexOutOfRange, "unknown state");
  if (states_[from].rank != states_[to].rank + 1) {
    throw Error(ErrorCode::NotRanked, "transition " + std::to_string(from) + " -> " + std::to_string(to) +
                                          " does not step down one rank");
  }
  insert_sorted(states_[from].next[symbol], to);
}

std::size_t RankedAutomaton::num_transitions() const noexcept {
  std::size_t n = 0;
  for (const State& s : states_)
    for (const auto& v : s.next) n += v.size();
  return n;
}

std::vector<StateId> RankedAutomaton::initial_states() const {
  std::vector<StateId> out;
  for (StateId q = 0; q < states_.size(); ++q)
    if (states_[q].initial) out.push_back(q);
  return out;
}

std::vector<StateId> RankedAutomaton::final_states() const {
  std::vector<StateId> out;
  for (StateId q = 0; q < states_.size(); ++q)
    if (states_[q].final) out.push_back(q);
  return out;
}

std::vector<Transition> RankedAutomaton::transitions() const {
  std::vector<Transition> out;
  for (StateId q = 0; q < states_.size(); ++q)
    for (Symbol s = 0; s < params_.k(); ++s)
      for (StateId t : states_[q].next[s]) out.push_back({q, s, t});
  return out;
}

bool RankedAutomaton::is_deterministic() const {
  if (initial_states().size() != 1) return false;
  for (const State& st : states_)
    for (const auto& v : st.next)
      if (v.size() > 1) return false;
  return true;
}

bool RankedAutomaton::accepts(const Word& w) const {
  if (w.size() != params_.ell()) return false;
  std::vector<StateId> cur = initial_states();
  for (Symbol s : w.symbols) {
    if (s >= params_.k()) return false;
    std::vector<StateId> next;
    for (StateId q : cur)
      for (StateId t : states_[q].next[s]) next.push_back(t);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
  }
  return std::any_of(cur.begin(), cur.end(), [&](StateId q) { return states_[q].final; });
}

StateId GeneralAutomaton::add_state(bool final) {
  states_.push_back(State{final, std::vector<std::vector<StateId>>(k_)});
  return static_cast<StateId>(states_.size() - 1);
}

void GeneralAutomaton::add_transition(StateId from, Symbol symbol, StateId to) {
  check_symbol(symbol, k_);
  if (from >= states_.size() || to >= states_.size()) throw Error(ErrorCode::IndexOutOfRange, "unknown state");
  insert_sorted(states_[from].next[symbol], to);
}

std::size_t GeneralAutomaton::num_transitions() const noexcept {
  std::size_t n = 0;
  for (const State& s : states_)
    for (const auto& v : s.next) n += v.size();
  return n;
}

std::vector<Transition> GeneralAutomaton::transitions() const {
  std::vector<Transition> out;
  for (StateId q = 0; q < states_.size(); ++q)
    for (Symbol s = 0; s < k_; ++s)
      for (StateId t : states_[q].next[s]) out.push_back({q, s, t});
  return out;
}

bool GeneralAutomaton::is_deterministic() const {
  for (const State& st : states_)
    for (const auto& v : st.next)
      if (v.size() > 1) return false;
  return true;
}

bool GeneralAutomaton::is_complete() const {
  for (const State& st : states_)
    for (const auto& v : st.next)
      if (v.size() != 1) return false;
  return true;
}

bool GeneralAutomaton::accepts(const Word& w) const {
  if (states_.empty()) return false;
  std::vector<StateId> cur{initial_};
  for (Symbol s : w.symbols) {
    if (s >= k_) return false;
    std::vector<StateId> next;
    for (StateId q : cur)
      for (StateId t : states_[q].next[s]) next.push_back(t);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
  }
  return std::any_of(cur.begin(), cur.end(), [&](StateId q) { return states_[q].final; });
}

std::uint64_t WidthProfile::total() const noexcept {
  return std::accumulate(widths.begin(), widths.end(), std::uint64_t{0});
}

RankedAutomaton determinize(const RankedAutomaton& a) {
  const std::uint32_t k = a.params().k();
  RankedAutomaton out(a.params());
  std::map<std::vector<StateId>, StateId> index;
  std::deque<std::vector<StateId>> queue;

  auto intern = [&](std::vector<StateId> subset, std::uint32_t rank) {
    const auto it = index.find(subset);
    if (it != index.end()) return it->second;
    const bool initial = rank == a.params().ell() && queue.empty() && index.empty();
    const bool final = rank == 0 && std::any_of(subset.begin(), subset.end(), [&](StateId q) { return a.is_final(q); });
    const StateId id = out.add_state(rank, initial, final);
    index.emplace(subset, id);
    queue.push_back(std::move(subset));
    return id;
  };

  std::vector<StateId> start = a.initial_states();
  if (start.empty()) {
    out.add_state(a.params().ell(), true, false);
    return out;
  }
  intern(start, a.params().ell());
  while (!queue.empty()) {
    std::vector<StateId> subset = std::move(queue.front());
    queue.pop_front();
    const StateId from = index.at(subset);
    const std::uint32_t rank = a.rank(subset.front());
    if (rank == 0) continue;
    for (Symbol s = 0; s < k; ++s) {
      std::vector<StateId> next;
      for (StateId q : subset)
        for (StateId t : a.successors(q, s)) next.push_back(t);
      if (next.empty()) continue;
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      out.add_transition(from, s, intern(std::move(next), rank - 1));
    }
  }
  return out;
}

GeneralAutomaton determinize(const GeneralAutomaton& a) {
  const std::uint32_t k = a.k();
  GeneralAutomaton out(k);
  if (a.num_states() == 0) {
    out.set_initial(out.add_state(false));
    return out;
  }
  std::map<std::vector<StateId>, StateId> index;
  std::deque<std::vector<StateId>> queue;
  auto intern = [&](std::vector<StateId> subset) {
    const auto it = index.find(subset);
    if (it != index.end()) return it->second;
    const bool final = std::any_of(subset.begin(), subset.end(), [&](StateId q) { return a.is_final(q); });
    const StateId id = out.add_state(final);
    index.emplace(subset, id);
    queue.push_back(std::move(subset));
    return id;
  };
  out.set_initial(intern({a.initial()}));
  while (!queue.empty()) {
    std::vector<StateId> subset = std::move(queue.front());
    queue.pop_front();
    const StateId from = index.at(subset);
    for (Symbol s = 0; s < k; ++s) {
      std::vector<StateId> next;
      for (StateId q : subset)
        for (StateId t : a.successors(q, s)) next.push_back(t);
      if (next.empty()) continue;
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      out.add_transition(from, s, intern(std::move(next)));
    }
  }
  return out;
}

namespace {

RankedAutomaton relabel(const RankedAutomaton& a, const std::vector<StateId>& order) {
  // order lists the kept old states in their new numbering
  constexpr StateId kDropped = ~StateId{0};
  std::vector<StateId> map(a.num_states(), kDropped);
  RankedAutomaton out(a.params());
  for (StateId q : order) map[q] = out.add_state(a.rank(q), a.is_initial(q), a.is_final(q));
  for (const Transition& t : a.transitions()) {
    if (map[t.from] != kDropped && map[t.to] != kDropped) out.add_transition(map[t.from], t.symbol, map[t.to]);
  }
  return out;
}

}  // namespace

std::vector<BitVector> right_languages(const RankedAutomaton& a) {
  const std::uint32_t k = a.params().k();
  std::vector<StateId> by_rank(a.num_states());
  std::iota(by_rank.begin(), by_rank.end(), StateId{0});
  std::stable_sort(by_rank.begin(), by_rank.end(), [&](StateId x, StateId y) { return a.rank(x) < a.rank(y); });
  std::vector<BitVector> lang(a.num_states());
  for (StateId q : by_rank) {
    const std::uint32_t r = a.rank(q);
    if (r == 0) {
      lang[q] = BitVector(1);
      if (a.is_final(q)) lang[q].set(0);
      continue;
    }
    const std::uint64_t width = a.params().power(r - 1);
    BitVector bits(width * k);
    for (Symbol s = 0; s < k; ++s) {
      BitVector part(width);
      for (StateId t : a.successors(q, s)) part |= lang[t];
      bits.assign_range(s * width, part);
    }
    lang[q] = std::move(bits);
  }
  return lang;
}

RankedAutomaton trim(const RankedAutomaton& a) {
  const std::size_t n = a.num_states();
  std::vector<char> fwd(n, 0), bwd(n, 0);
  std::vector<StateId> stack = a.initial_states();
  for (StateId q : stack) fwd[q] = 1;
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (Symbol s = 0; s < a.params().k(); ++s)
      for (StateId t : a.successors(q, s))
        if (!fwd[t]) {
          fwd[t] = 1;
          stack.push_back(t);
        }
  }
  std::vector<std::vector<StateId>> pred(n);
  for (const Transition& t : a.transitions()) pred[t.to].push_back(t.from);
  stack = a.final_states();
  for (StateId q : stack) bwd[q] = 1;
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (StateId p : pred[q])
      if (!bwd[p]) {
        bwd[p] = 1;
        stack.push_back(p);
      }
  }
  std::vector<StateId> keep;
  for (StateId q = 0; q < n; ++q)
    if (fwd[q] && bwd[q]) keep.push_back(q);
  return relabel(a, keep);
}

RankedAutomaton canonicalize(const RankedAutomaton& a) {
  const std::vector<BitVector> lang = right_languages(a);
  std::vector<StateId> order(a.num_states());
  std::iota(order.begin(), order.end(), StateId{0});
  std::stable_sort(order.begin(), order.end(), [&](StateId x, StateId y) {
    if (a.rank(x) != a.rank(y)) return a.rank(x) > a.rank(y);
    return lang[y] < lang[x];
  });
  return relabel(a, order);
}

GeneralAutomaton to_general(const RankedAutomaton& a) {
  GeneralAutomaton out(a.params().k());
  for (StateId q = 0; q < a.num_states(); ++q) out.add_state(a.is_final(q));
  for (const Transition& t : a.transitions()) out.add_transition(t.from, t.symbol, t.to);
  const std::vector<StateId> inits = a.initial_states();
  if (inits.size() == 1) {
    out.set_initial(inits.front());
    return out;
  }
  bool final = false;
  for (StateId q : inits) final = final || a.is_final(q);
  const StateId start = out.add_state(final);
  for (StateId q : inits)
    for (Symbol s = 0; s < a.params().k(); ++s)
      for (StateId t : a.successors(q, s)) out.add_transition(start, s, t);
  out.set_initial(start);
  return out;
}

GeneralAutomaton complete(const GeneralAutomaton& a) {
  if (!a.is_deterministic()) throw Error(ErrorCode::NotDeterministic, "cannot complete a nondeterministic automaton");
  GeneralAutomaton out = a;
  if (out.num_states() == 0) {
    out.set_initial(out.add_state(false));
  }
  if (out.is_complete()) return out;
  const auto n = static_cast<StateId>(out.num_states());
  const StateId sink = out.add_state(false);
  for (StateId q = 0; q <= n; ++q)
    for (Symbol s = 0; s < out.k(); ++s)
      if (out.successors(q, s).empty()) out.add_transition(q, s, sink);
  return out;
}

GeneralAutomaton minimize_dfa(const GeneralAutomaton& input) {
  const GeneralAutomaton a = complete(input);
  const std::uint32_t k = a.k();
  const std::size_t n = a.num_states();
  auto next = [&](StateId q, Symbol s) { return a.successors(q, s).front(); };

  std::vector<char> reach(n, 0);
  std::vector<StateId> stack{a.initial()};
  reach[a.initial()] = 1;
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (Symbol s = 0; s < k; ++s) {
      const StateId t = next(q, s);
      if (!reach[t]) {
        reach[t] = 1;
        stack.push_back(t);
      }
    }
  }

  std::vector<std::uint32_t> cls(n, 0);
  for (StateId q = 0; q < n; ++q) cls[q] = a.is_final(q) ? 1 : 0;
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> sig_ids;
    std::vector<std::uint32_t> refined(n, 0);
    for (StateId q = 0; q < n; ++q) {
      if (!reach[q]) continue;
      std::vector<std::uint32_t> sig{cls[q]};
      for (Symbol s = 0; s < k; ++s) sig.push_back(cls[next(q, s)]);
      refined[q] = sig_ids.try_emplace(std::move(sig), static_cast<std::uint32_t>(sig_ids.size())).first->second;
    }
    cls = std::move(refined);
    if (sig_ids.size() == classes) break;
    classes = sig_ids.size();
  }

  std::vector<StateId> rep(classes, 0);
  for (StateId q = 0; q < n; ++q)
    if (reach[q]) rep[cls[q]] = q;

  // breadth-first renumbering gives a canonical form
  constexpr StateId kUnset = ~StateId{0};
  std::vector<StateId> id(classes, kUnset);
  std::vector<std::uint32_t> order;
  std::deque<std::uint32_t> queue{cls[a.initial()]};
  id[cls[a.initial()]] = 0;
  while (!queue.empty()) {
    const std::uint32_t c = queue.front();
    queue.pop_front();
    order.push_back(c);
    for (Symbol s = 0; s < k; ++s) {
      const std::uint32_t d = cls[next(rep[c], s)];
      if (id[d] == kUnset) {
        id[d] = static_cast<StateId>(order.size() + queue.size());
        queue.push_back(d);
      }
    }
  }
  GeneralAutomaton out(k);
  for (std::uint32_t c : order) out.add_state(a.is_final(rep[c]));
  for (std::uint32_t c : order)
    for (Symbol s = 0; s < k; ++s) out.add_transition(id[c], s, id[cls[next(rep[c], s)]]);
  out.set_initial(0);
  return out;
}

bool equivalent(const GeneralAutomaton& a, const GeneralAutomaton& b) {
  if (a.k() != b.k()) throw Error(ErrorCode::ParamsMismatch, "alphabet sizes differ");
  const GeneralAutomaton ma = minimize_dfa(determinize(a));
  const GeneralAutomaton mb = minimize_dfa(determinize(b));
  if (ma.num_states() != mb.num_states()) return false;
  for (StateId q = 0; q < ma.num_states(); ++q)
    if (ma.is_final(q) != mb.is_final(q)) return false;
  return ma.transitions() == mb.transitions();
}

bool equivalent(const RankedAutomaton& a, const RankedAutomaton& b) {
  if (!(a.params() == b.params())) throw Error(ErrorCode::ParamsMismatch, "block parameters differ");
  return equivalent(to_general(a), to_general(b));
}

WidthProfile width_profile(const RankedAutomaton& a) {
  const RankedAutomaton t = trim(a);
  WidthProfile p;
  p.widths.assign(a.params().ell() + 1, 0);
  for (StateId q = 0; q < t.num_states(); ++q) ++p.widths[t.rank(q)];
  p.has_sink = t.num_states() > 0 && t.is_deterministic();
  return p;
}

std::uint64_t dsc(const GeneralAutomaton& a) { return minimize_dfa(determinize(a)).num_states(); }

std::uint64_t dsc(const RankedAutomaton& a) { return dsc(to_general(a)); }

std::uint64_t nsc_upper(const RankedAutomaton& a) { return trim(a).num_states(); }

}  // namespace blocklang
