#include "blocklang/langops.hpp"

#include "blocklang/error.hpp"

namespace blocklang {

namespace {

void require_same(const Bitmap& x, const Bitmap& y) {
  if (!(x.params() == y.params())) throw Error(ErrorCode::ParamsMismatch, "bitmaps have different (k, ell)");
}

// Trimmed general form; completed with a sink when deterministic.
GeneralAutomaton surgery_base(const RankedAutomaton& a) {
  const RankedAutomaton t = trim(a);
  if (t.num_states() == 0) throw Error(ErrorCode::EmptyLanguage, "automaton accepts no word");
  GeneralAutomaton g = to_general(t);
  return g.is_deterministic() ? complete(g) : g;
}

}  // namespace

Bitmap bm_and(const Bitmap& x, const Bitmap& y) {
  require_same(x, y);
  return Bitmap(x.params(), x.bits() & y.bits());
}

Bitmap bm_or(const Bitmap& x, const Bitmap& y) {
  require_same(x, y);
  return Bitmap(x.params(), x.bits() | y.bits());
}

Bitmap bm_not(const Bitmap& x) { return Bitmap(x.params(), ~x.bits()); }

BitVector perfect_shuffle(const BitVector& v, std::uint32_t k, std::uint64_t block) {
  const std::uint64_t part = v.size() / k;
  const std::uint64_t rounds = part / block;
  BitVector out(v.size());
  std::uint64_t pos = 0;
  for (std::uint64_t r = 0; r < rounds; ++r) {
    for (std::uint32_t p = 0; p < k; ++p) {
      out.assign_range(pos, v.slice(p * part + r * block, block));
      pos += block;
    }
  }
  return out;
}

Bitmap reverse_bitmap(const Bitmap& b) {
  const BlockParams& p = b.params();
  BitVector bits = b.bits();
  for (std::uint32_t i = 1; i < p.ell(); ++i) bits = perfect_shuffle(bits, p.k(), p.power(i - 1));
  return Bitmap(p, std::move(bits));
}

Bitmap add_word(const Bitmap& b, const Word& w) {
  BitVector bits = b.bits();
  bits.set(word_to_index(w, b.params()));
  return Bitmap(b.params(), std::move(bits));
}

Bitmap remove_word(const Bitmap& b, const Word& w) {
  BitVector bits = b.bits();
  bits.reset(word_to_index(w, b.params()));
  return Bitmap(b.params(), std::move(bits));
}

Bitmap concat_bitmaps(const Bitmap& x, const Bitmap& y) {
  if (x.params().k() != y.params().k()) throw Error(ErrorCode::ParamsMismatch, "concatenation needs one alphabet");
  const BlockParams p(x.params().k(), x.params().ell() + y.params().ell());
  const std::uint64_t width = y.size();
  BitVector bits(p.universe_size());
  for (std::size_t i = x.bits().find_first(); i < x.size(); i = x.bits().find_next(i + 1)) {
    bits.assign_range(i * width, y.bits());
  }
  return Bitmap(p, std::move(bits));
}

GeneralAutomaton star_automaton(const RankedAutomaton& a) {
  const GeneralAutomaton g = surgery_base(a);
  const StateId q0 = g.initial();
  constexpr StateId kGone = ~StateId{0};
  std::vector<StateId> id(g.num_states(), kGone);
  GeneralAutomaton out(g.k());
  for (StateId q = 0; q < g.num_states(); ++q)
    if (!g.is_final(q)) id[q] = out.add_state(q == q0);
  for (const Transition& t : g.transitions()) {
    if (id[t.from] == kGone) continue;
    out.add_transition(id[t.from], t.symbol, g.is_final(t.to) ? id[q0] : id[t.to]);
  }
  out.set_initial(id[q0]);
  return out;
}

GeneralAutomaton plus_automaton(const RankedAutomaton& a) {
  const GeneralAutomaton g = surgery_base(a);
  const StateId q0 = g.initial();
  GeneralAutomaton out(g.k());
  for (StateId q = 0; q < g.num_states(); ++q) out.add_state(g.is_final(q));
  for (const Transition& t : g.transitions())
    if (!g.is_final(t.from)) out.add_transition(t.from, t.symbol, t.to);
  for (StateId q = 0; q < g.num_states(); ++q) {
    if (!g.is_final(q)) continue;
    for (Symbol s = 0; s < g.k(); ++s)
      for (StateId t : g.successors(q0, s)) out.add_transition(q, s, t);
  }
  out.set_initial(q0);
  return out;
}

GeneralAutomaton stencil_automaton(const RankedAutomaton& a) {
  const RankedAutomaton t = trim(a);
  if (t.num_states() == 0) throw Error(ErrorCode::EmptyLanguage, "automaton accepts no word");
  if (!t.is_deterministic()) throw Error(ErrorCode::NotDeterministic, "stencil needs a DFA");
  const std::uint32_t k = t.params().k();
  const std::uint32_t ell = t.params().ell();

  GeneralAutomaton out(k);
  for (StateId q = 0; q < t.num_states(); ++q) out.add_state(true);
  // chain[i] rejects exactly the words of length i
  std::vector<StateId> chain(ell);
  for (std::uint32_t i = 0; i < ell; ++i) chain[i] = out.add_state(i != 0);
  const StateId accept_all = t.final_states().front();

  for (StateId q = 0; q < t.num_states(); ++q) {
    for (Symbol s = 0; s < k; ++s) {
      const auto& next = t.successors(q, s);
      if (!next.empty()) {
        out.add_transition(q, s, next.front());
      } else if (t.rank(q) == 0) {
        out.add_transition(q, s, q);
      } else {
        out.add_transition(q, s, chain[t.rank(q) - 1]);
      }
    }
  }
  for (std::uint32_t i = 0; i < ell; ++i)
    for (Symbol s = 0; s < k; ++s) out.add_transition(chain[i], s, i == 0 ? accept_all : chain[i - 1]);
  out.set_initial(t.initial_states().front());
  return out;
}

GeneralAutomaton complement_automaton(const GeneralAutomaton& a) {
  GeneralAutomaton out = complete(a);
  for (StateId q = 0; q < out.num_states(); ++q) out.set_final(q, !out.is_final(q));
  return out;
}

}  // namespace blocklang
