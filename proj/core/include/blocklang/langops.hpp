#pragma once

#include "blocklang/automata.hpp"
#include "blocklang/blockcore.hpp"

namespace blocklang {

/// Bitwise language operations. Binary forms throw ParamsMismatch.
Bitmap bm_and(const Bitmap& x, const Bitmap& y);
Bitmap bm_or(const Bitmap& x, const Bitmap& y);
/// Block complement: Sigma^ell minus L.
Bitmap bm_not(const Bitmap& x);

/// Splits v into k equal parts and interleaves them in blocks of `block`
/// bits: block 0 of every part, then block 1 of every part, and so on.
BitVector perfect_shuffle(const BitVector& v, std::uint32_t k, std::uint64_t block);

/// Bitmap of the reversed language, via ell-1 perfect shuffles.
Bitmap reverse_bitmap(const Bitmap& b);

/// Throw WrongLength (or BadSymbol) for a word outside Sigma^ell.
Bitmap add_word(const Bitmap& b, const Word& w);
Bitmap remove_word(const Bitmap& b, const Word& w);

/// L1 L2 over the shared alphabet. Throws ParamsMismatch for different k and
/// ParamsTooLarge when k^(ell1+ell2) exceeds the cap.
Bitmap concat_bitmaps(const Bitmap& x, const Bitmap& y);

/// Transition surgery on a (minimal) automaton for a non-empty block
/// language. Deterministic inputs are completed with a sink first. All throw
/// EmptyLanguage.
GeneralAutomaton star_automaton(const RankedAutomaton& a);
GeneralAutomaton plus_automaton(const RankedAutomaton& a);
/// L together with every word whose length differs from ell. Throws
/// NotDeterministic for an NFA input.
GeneralAutomaton stencil_automaton(const RankedAutomaton& a);

/// Sigma* minus L(a). Throws NotDeterministic.
GeneralAutomaton complement_automaton(const GeneralAutomaton& a);

}  // namespace blocklang
