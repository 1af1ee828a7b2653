#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "blocklang/blockcore.hpp"

namespace blocklang {

struct MaxWitnessParams {
  std::uint32_t ell = 0;
  /// Least i with 2^(ell-i) <= 2^(2^i) - 1.
  std::uint32_t r = 0;
  /// Number of distinct blocks in the bitmap (width of the widest rank).
  std::uint64_t t = 0;
  /// Rank at which that width is reached.
  std::uint32_t r_star = 0;
};

struct MaxWitness {
  Bitmap bitmap;
  MaxWitnessParams params;
};

MaxWitnessParams max_witness_params(std::uint32_t ell);

/// Binary language of maximal deterministic state complexity: the first t
/// positive integers written LSB first, each padded to 2^r_star bits. Throws
/// ParamsTooLarge.
MaxWitness max_witness(std::uint32_t ell);

/// The same language from its membership condition: w1 w2 with
/// |w2| = r_star is accepted iff bit ind(w2) of ind(w1)+1 is set.
Bitmap max_witness_by_definition(std::uint32_t ell);

/// { w reverse(w) : w in Sigma^d }. Throws BadParams for k < 2 or d == 0.
Bitmap palindrome_witness(std::uint32_t k, std::uint32_t d);

/// Words w_0 .. w_{2d-1} with w_i = w_{2d-1-i} for every i < d of parity x.
/// Throws BadParity unless x is 0 or 1.
Bitmap half_match_witness(std::uint32_t k, std::uint32_t d, std::uint32_t x);

/// Words w_0 .. w_{2d-1} with w_i = w_{i+d} for some i < d, the matched
/// symbol not being the last letter. Throws BadParams for k < 2 or d < 2.
Bitmap prohibited_symbol_witness(std::uint32_t k, std::uint32_t d);

/// full, singleton-a, singleton-b, ac-power, bc-power, ab-powers.
const std::vector<std::string_view>& simple_families();
/// Throws UnknownFamily, or BadParams when k is too small for the family.
Bitmap simple_witness(std::string_view name, std::uint32_t k, std::uint32_t ell);

}  // namespace blocklang
