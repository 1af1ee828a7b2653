#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "blocklang/automata.hpp"
#include "blocklang/blockcore.hpp"

namespace blocklang {

/// `BLK1 <k> <ell>` followed by the k^ell bits on one line.
std::string write_blk1(const Bitmap& b);
/// Throws Parse on a missing header or bad characters, WrongLength on a bit
/// line of the wrong size.
Bitmap parse_blk1(std::string_view text);

/// `AUT1 <k> <ell|-> <ranked|general>`, then state lines by id, then
/// transition lines in (from, symbol, to) order.
std::string write_aut1(const RankedAutomaton& a);
std::string write_aut1(const GeneralAutomaton& a);

using AnyAutomaton = std::variant<RankedAutomaton, GeneralAutomaton>;
/// Throws Parse (and NotRanked for rank violations in ranked files).
AnyAutomaton parse_aut1(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace blocklang
