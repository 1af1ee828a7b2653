#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "blocklang/blockcore.hpp"

namespace blocklang {

using BigInt = boost::multiprecision::cpp_int;

struct DfaBound {
  BigInt value;
  std::uint32_t r = 0;
};

/// Largest possible dsc of a block language over k letters of length ell,
/// together with the rank r where segment counts stop growing with depth.
/// Throws BadParams for k < 2, ParamsTooLarge when 2^(k^i) gets absurd.
DfaBound campeanu_ho_bound(std::uint32_t k, std::uint32_t ell);

/// Largest possible nsc over all block languages of the given shape.
BigInt nfa_max_size(std::uint32_t k, std::uint32_t ell);

struct WidthBound {
  BigInt dfa_max;
  BigInt nfa_max;
};

/// Per-rank maxima: min(k^(ell-i), 2^(k^i) - 1) and min(k^(ell-i), k^i).
WidthBound width_bounds(std::uint32_t k, std::uint32_t ell, std::uint32_t i);

enum class BoundOp {
  Union,
  Intersection,
  AddWord,
  RemoveWord,
  Concatenation,
  BlockComplement,
  Reversal,
  Star,
  Plus,
  Stencil,
  Complement,
};

std::string_view to_string(BoundOp op) noexcept;
/// Accepts the names printed by to_string. Throws Parse.
BoundOp parse_bound_op(std::string_view name);
/// Number of bitmap operands the operation takes.
std::size_t arity(BoundOp op) noexcept;

struct NfaCheck {
  BigInt formula;
  std::uint64_t observed = 0;
  bool certified = false;
  bool satisfied = false;
  bool tight = false;
};

struct BoundReport {
  std::string subject;
  /// Upper bound from the formula; for the word operations and block
  /// complement `lower` holds the other end of the admissible range.
  BigInt formula;
  std::optional<BigInt> lower;
  std::uint64_t observed = 0;
  bool satisfied = false;
  bool tight = false;
  std::optional<NfaCheck> nfa;
};

struct CheckOptions {
  /// Also compare nsc for operations that have an NFA formula.
  bool with_nfa = true;
  std::uint64_t budget = 10'000'000;
};

/// Builds the result of `op`, measures dsc (and nsc where meaningful) and
/// compares with the operation's formula. Word operations need `word`.
/// Throws ParamsMismatch, WrongLength, EmptyLanguage as the operation does.
BoundReport check_operation_bounds(BoundOp op, std::span<const Bitmap> operands,
                                   const std::optional<Word>& word = std::nullopt, const CheckOptions& options = {});

/// One tab-separated line: subject, dsc observed/formula, verdicts and the
/// NFA part when present.
std::string format_report(const BoundReport& report);

struct TableRow {
  BoundReport report;
  /// The witness is one for which the formula is attained.
  bool expect_tight = false;
  /// Tightness is judged on the nsc part of the report.
  bool judge_nfa = false;

  /// Rows not expected to be tight always pass.
  bool ok() const noexcept;
};

/// Every operation witness with a known tight instance, at block lengths up
/// to max_ell. Rows are evaluated concurrently when `parallel` is set; the
/// order of the result does not depend on scheduling.
std::vector<TableRow> run_table2(std::uint32_t max_ell, bool parallel = true);

}  // namespace blocklang
