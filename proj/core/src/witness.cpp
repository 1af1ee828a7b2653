#include "blocklang/witness.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "blocklang/error.hpp"

namespace blocklang {

namespace {

Bitmap from_predicate(const BlockParams& p, const std::function<bool(const Word&)>& accept) {
  BitVector bits(p.universe_size());
  Word w;
  w.symbols.assign(p.ell(), 0);
  for (std::uint64_t i = 0; i < p.universe_size(); ++i) {
    if (accept(w)) bits.set(i);
    // increment w as a base-k counter
    for (std::uint32_t pos = p.ell(); pos-- > 0;) {
      if (++w.symbols[pos] < p.k()) break;
      w.symbols[pos] = 0;
    }
  }
  return Bitmap(p, std::move(bits));
}

void require_alphabet(std::uint32_t k, std::uint32_t need, std::string_view what) {
  if (k < need) {
    throw Error(ErrorCode::BadParams, std::string(what) + " needs k >= " + std::to_string(need));
  }
}

std::uint32_t doubled(std::uint32_t d) {
  if (d == 0) throw Error(ErrorCode::BadParams, "half length d must be at least 1");
  return 2 * d;
}

}  // namespace

MaxWitnessParams max_witness_params(std::uint32_t ell) {
  if (ell == 0) throw Error(ErrorCode::BadParams, "block length must be at least 1");
  MaxWitnessParams m;
  m.ell = ell;
  // 2^(ell-i) <= 2^(2^i) - 1 holds exactly when ell - i < 2^i
  while ((ell - m.r) >= (std::uint64_t{1} << m.r)) ++m.r;
  const std::uint64_t wide = std::uint64_t{1} << (ell - m.r);
  const std::uint64_t deep = (std::uint64_t{1} << (std::uint64_t{1} << (m.r - 1))) - 1;
  m.t = std::max(wide, deep);
  m.r_star = m.t == wide ? m.r : m.r - 1;
  return m;
}

MaxWitness max_witness(std::uint32_t ell) {
  const BlockParams p(2, ell);
  const MaxWitnessParams m = max_witness_params(ell);
  const std::uint64_t width = std::uint64_t{1} << m.r_star;
  BitVector bits(p.universe_size());
  for (std::uint64_t i = 1; i <= m.t; ++i) {
    const std::uint64_t offset = (i - 1) * width;
    for (std::uint64_t j = 0; j < width && j < 64; ++j)
      if ((i >> j) & 1U) bits.set(offset + j);
  }
  MaxWitness out{Bitmap(p, std::move(bits)), m};
  if (!(out.bitmap == max_witness_by_definition(ell))) {
    throw std::logic_error("MAX witness: closed form and definition disagree at ell=" + std::to_string(ell));
  }
  return out;
}

Bitmap max_witness_by_definition(std::uint32_t ell) {
  const BlockParams p(2, ell);
  const MaxWitnessParams m = max_witness_params(ell);
  const std::uint32_t head = ell - m.r_star;
  return from_predicate(p, [&](const Word& w) {
    std::uint64_t prefix = 0, suffix = 0;
    for (std::uint32_t i = 0; i < head; ++i) prefix = 2 * prefix + w.symbols[i];
    for (std::uint32_t i = head; i < ell; ++i) suffix = 2 * suffix + w.symbols[i];
    return suffix < 64 && (((prefix + 1) >> suffix) & 1U) != 0;
  });
}

Bitmap palindrome_witness(std::uint32_t k, std::uint32_t d) {
  require_alphabet(k, 2, "palindrome witness");
  const std::uint32_t ell = doubled(d);
  return from_predicate(BlockParams(k, ell), [&](const Word& w) {
    for (std::uint32_t i = 0; i < d; ++i)
      if (w.symbols[i] != w.symbols[ell - 1 - i]) return false;
    return true;
  });
}

Bitmap half_match_witness(std::uint32_t k, std::uint32_t d, std::uint32_t x) {
  if (x > 1) throw Error(ErrorCode::BadParity, "parity must be 0 or 1, got " + std::to_string(x));
  require_alphabet(k, 2, "half-match witness");
  const std::uint32_t ell = doubled(d);
  return from_predicate(BlockParams(k, ell), [&](const Word& w) {
    for (std::uint32_t i = x; i < d; i += 2)
      if (w.symbols[i] != w.symbols[ell - 1 - i]) return false;
    return true;
  });
}

Bitmap prohibited_symbol_witness(std::uint32_t k, std::uint32_t d) {
  require_alphabet(k, 2, "prohibited-symbol witness");
  if (d < 2) throw Error(ErrorCode::BadParams, "prohibited-symbol witness needs d >= 2");
  const std::uint32_t ell = 2 * d;
  return from_predicate(BlockParams(k, ell), [&](const Word& w) {
    for (std::uint32_t i = 0; i < d; ++i)
      if (w.symbols[i] == w.symbols[i + d] && w.symbols[i] != k - 1) return true;
    return false;
  });
}

const std::vector<std::string_view>& simple_families() {
  static const std::vector<std::string_view> names{"full",     "singleton-a", "singleton-b",
                                                   "ac-power", "bc-power",    "ab-powers"};
  return names;
}

Bitmap simple_witness(std::string_view name, std::uint32_t k, std::uint32_t ell) {
  const auto only = [](std::vector<Symbol> allowed) {
    return [allowed](const Word& w) {
      return std::all_of(w.symbols.begin(), w.symbols.end(), [&](Symbol s) {
        return std::find(allowed.begin(), allowed.end(), s) != allowed.end();
      });
    };
  };
  if (name == "full") return Bitmap(BlockParams(k, ell), BitVector::ones(BlockParams(k, ell).universe_size()));
  if (name == "singleton-a") return from_predicate(BlockParams(k, ell), only({0}));
  if (name == "singleton-b") {
    require_alphabet(k, 2, name);
    return from_predicate(BlockParams(k, ell), only({1}));
  }
  if (name == "ac-power") {
    require_alphabet(k, 3, name);
    return from_predicate(BlockParams(k, ell), only({0, 2}));
  }
  if (name == "bc-power") {
    require_alphabet(k, 3, name);
    return from_predicate(BlockParams(k, ell), only({1, 2}));
  }
  if (name == "ab-powers") {
    require_alphabet(k, 2, name);
    const auto a = only({0});
    const auto b = only({1});
    return from_predicate(BlockParams(k, ell), [&](const Word& w) { return a(w) || b(w); });
  }
  throw Error(ErrorCode::UnknownFamily, "no witness family named '" + std::string(name) + "'");
}

}  // namespace blocklang
