#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <random>
#include <sstream>

#include "blocklang/automata.hpp"
#include "blocklang/bounds.hpp"
#include "blocklang/cover.hpp"
#include "blocklang/error.hpp"
#include "blocklang/io.hpp"
#include "blocklang/langops.hpp"
#include "blocklang/synthesis.hpp"
#include "blocklang/witness.hpp"

namespace blocklang::cli {

namespace {

struct Options {
  std::vector<std::string> inputs;
  std::string output;
  std::string to = "min-dfa";
  std::string solver = "exact";
  std::optional<std::uint64_t> budget;
  bool allow_uncertified = false;
  bool parallel = false;
  std::string name;
  std::string word;
  std::uint32_t k = 2;
  std::uint32_t ell = 0;
  std::uint32_t d = 0;
  std::uint32_t x = 0;
  std::uint32_t max_ell = 4;
  bool serial = false;
  bool no_nfa = false;
  std::uint64_t seed = 1;
  std::uint32_t samples = 200;
};

std::uint64_t budget_of(const Options& o) {
  if (o.budget) return *o.budget;
  if (const char* env = std::getenv("BLOCKSET_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "BLOCKSET_BUDGET is not a number: '" + std::string(env) + "'");
    }
  }
  return kDefaultCoverBudget;
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyLanguage: return kEmptyLanguage;
    case ErrorCode::BudgetExceeded: return kBudgetExceeded;
    default: return kUsage;
  }
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

bool is_aut1(const std::string& text) { return text.rfind("AUT1", 0) == 0; }

Bitmap load_bitmap(const std::string& path) { return parse_blk1(read_file(path)); }

RankedAutomaton load_ranked(const std::string& path) {
  const std::string text = read_file(path);
  if (!is_aut1(text)) return bitmap_to_min_dfa(parse_blk1(text));
  AnyAutomaton a = parse_aut1(text);
  if (auto* r = std::get_if<RankedAutomaton>(&a)) return std::move(*r);
  throw Error(ErrorCode::NotRanked, "'" + path + "' holds a general automaton");
}

GeneralAutomaton load_general(const std::string& path) {
  const std::string text = read_file(path);
  if (!is_aut1(text)) return to_general(bitmap_to_min_dfa(parse_blk1(text)));
  AnyAutomaton a = parse_aut1(text);
  if (auto* r = std::get_if<RankedAutomaton>(&a)) return to_general(*r);
  return std::get<GeneralAutomaton>(std::move(a));
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
  } else {
    write_file(o.output, text);
  }
}

void need_inputs(const Options& o, std::size_t n, std::string_view what) {
  if (o.inputs.size() != n) {
    throw Error(ErrorCode::BadParams, std::string(what) + " takes " + std::to_string(n) + " input file(s)");
  }
}

int cmd_convert(const Options& o, std::ostream& out, std::ostream& err) {
  need_inputs(o, 1, "convert");
  const Bitmap b = load_bitmap(o.inputs[0]);
  std::ostream& summary = o.output.empty() ? err : out;
  if (o.to == "min-dfa") {
    const RankedAutomaton a = bitmap_to_min_dfa(b);
    const WidthProfile w = width_profile(a);
    emit(o, write_aut1(a), out);
    summary << "states " << a.num_states() << "\ndsc " << a.num_states() + 1 << "\nwidths " << join(w.widths) << '\n';
    return kOk;
  }
  NfaOptions nfa;
  nfa.solver = o.solver == "greedy" ? CoverStrategy::Greedy : CoverStrategy::Exact;
  nfa.budget = budget_of(o);
  nfa.parallel = o.parallel;
  const NfaResult r = bitmap_to_min_nfa(b, nfa);
  if (!r.certified && nfa.solver == CoverStrategy::Exact && !o.allow_uncertified) {
    err << "error: cover search exceeded the budget of " << nfa.budget << " nodes (use --allow-uncertified)\n";
    return kBudgetExceeded;
  }
  emit(o, write_aut1(r.automaton), out);
  summary << "states " << r.automaton.num_states() << "\nwidths " << join(width_profile(r.automaton).widths)
          << "\ncertified " << yes_no(r.certified) << '\n';
  return kOk;
}

int cmd_op(const Options& o, std::ostream& out) {
  const std::string& op = o.name;
  if (op == "and" || op == "or" || op == "concat") {
    need_inputs(o, 2, op);
    const Bitmap x = load_bitmap(o.inputs[0]), y = load_bitmap(o.inputs[1]);
    const Bitmap r = op == "and" ? bm_and(x, y) : op == "or" ? bm_or(x, y) : concat_bitmaps(x, y);
    emit(o, write_blk1(r), out);
    return kOk;
  }
  need_inputs(o, 1, op);
  if (op == "not" || op == "reverse" || op == "add-word" || op == "remove-word") {
    const Bitmap x = load_bitmap(o.inputs[0]);
    Bitmap r = x;
    if (op == "not") {
      r = bm_not(x);
    } else if (op == "reverse") {
      r = reverse_bitmap(x);
    } else {
      const Word w = parse_word(o.word, x.params().k());
      r = op == "add-word" ? add_word(x, w) : remove_word(x, w);
    }
    emit(o, write_blk1(r), out);
    return kOk;
  }
  if (op == "star" || op == "plus" || op == "stencil") {
    const RankedAutomaton a = load_ranked(o.inputs[0]);
    const GeneralAutomaton g = op == "star" ? star_automaton(a) : op == "plus" ? plus_automaton(a) : stencil_automaton(a);
    emit(o, write_aut1(g), out);
    return kOk;
  }
  if (op == "complement") {
    emit(o, write_aut1(complement_automaton(load_general(o.inputs[0]))), out);
    return kOk;
  }
  throw Error(ErrorCode::BadParams, "unknown operation '" + op + "'");
}

int cmd_witness(const Options& o, std::ostream& out) {
  const std::string& f = o.name;
  auto require = [](std::uint32_t v, const char* flag) {
    if (v == 0) throw Error(ErrorCode::BadParams, std::string("missing or zero ") + flag);
  };
  Bitmap b(BlockParams(1, 1));
  if (f == "max") {
    require(o.ell, "--ell");
    b = max_witness(o.ell).bitmap;
  } else if (f == "palindrome") {
    require(o.d, "--d");
    b = palindrome_witness(o.k, o.d);
  } else if (f == "half-match") {
    require(o.d, "--d");
    b = half_match_witness(o.k, o.d, o.x);
  } else if (f == "prohibited") {
    require(o.d, "--d");
    b = prohibited_symbol_witness(o.k, o.d);
  } else {
    const auto& names = simple_families();
    if (std::find(names.begin(), names.end(), f) == names.end()) {
      throw Error(ErrorCode::UnknownFamily, "no witness family named '" + f + "'");
    }
    require(o.ell, "--ell");
    b = simple_witness(f, o.k, o.ell);
  }
  emit(o, write_blk1(b), out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.name == "table2") {
    bool all_ok = true;
    for (const TableRow& row : run_table2(o.max_ell, !o.serial)) {
      all_ok = all_ok && row.ok();
      out << format_report(row.report) << "\texpect=" << (row.expect_tight ? (row.judge_nfa ? "tight-nsc" : "tight") : "info")
          << "\tverdict=" << (row.ok() ? "ok" : "FAIL") << '\n';
    }
    return all_ok ? kOk : kCheckFailed;
  }
  const BoundOp op = parse_bound_op(o.name);
  need_inputs(o, arity(op), o.name);
  std::vector<Bitmap> operands;
  for (const std::string& path : o.inputs) operands.push_back(load_bitmap(path));
  std::optional<Word> w;
  if (op == BoundOp::AddWord || op == BoundOp::RemoveWord) w = parse_word(o.word, operands[0].params().k());
  CheckOptions check;
  check.with_nfa = !o.no_nfa;
  check.budget = budget_of(o);
  const BoundReport r = check_operation_bounds(op, operands, w, check);
  out << format_report(r) << '\n';
  return r.satisfied ? kOk : kCheckFailed;
}

int cmd_solve_cover(const Options& o, std::ostream& out, std::ostream& err) {
  need_inputs(o, 1, "solve-cover");
  const CoverInstance inst = parse_cov1(read_file(o.inputs[0]));
  CoverSolution sol;
  if (o.solver == "greedy") {
    sol = greedy_cover(inst);
  } else {
    try {
      sol = min_cover(inst, budget_of(o));
    } catch (const CoverBudgetExceeded& e) {
      if (!o.allow_uncertified) {
        err << "error: " << e.what() << " (use --allow-uncertified)\n";
        return kBudgetExceeded;
      }
      sol = e.best();
    }
  }
  out << "size " << sol.size() << "\ncertified " << yes_no(sol.certified_minimal) << "\nnodes " << sol.nodes << '\n';
  for (const BitVector& e : sol.elements) out << "elem " << e.to_string() << '\n';
  for (std::size_t t = 0; t < inst.targets.size(); ++t) {
    out << "select " << inst.targets[t].to_string();
    for (std::size_t i : sol.selection[t]) out << ' ' << i;
    out << '\n';
  }
  return kOk;
}

int cmd_sc(const Options& o, std::ostream& out) {
  need_inputs(o, 1, "sc");
  const Bitmap b = load_bitmap(o.inputs[0]);
  out << "k " << b.params().k() << "\nell " << b.params().ell() << '\n';
  if (b.empty_language()) {
    out << "dsc 1\nnsc 0\n";
    return kOk;
  }
  const RankedAutomaton dfa = bitmap_to_min_dfa(b);
  NfaOptions nfa;
  nfa.budget = budget_of(o);
  nfa.parallel = o.parallel;
  const NfaResult r = bitmap_to_min_nfa(b, nfa);
  out << "dsc " << dfa.num_states() + 1 << "\ndfa-widths " << join(width_profile(dfa).widths) << "\nnsc "
      << r.automaton.num_states() << "\nnfa-widths " << join(width_profile(r.automaton).widths) << "\nnsc-certified "
      << yes_no(r.certified) << "\nnfa-deterministic " << yes_no(r.automaton.is_deterministic()) << '\n';
  return kOk;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  std::mt19937_64 rng(o.seed);
  int failures = 0;
  auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    out << (ok ? "PASS " : "FAIL ") << name;
    if (!ok) out << ' ' << detail;
    out << '\n';
    failures += ok ? 0 : 1;
  };
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> shapes{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}};
  std::string bad_roundtrip, bad_reverse, bad_equiv, bad_bound;
  for (std::uint32_t s = 0; s < o.samples; ++s) {
    const auto [k, ell] = shapes[s % shapes.size()];
    const BlockParams p(k, ell);
    BitVector bits(p.universe_size());
    std::bernoulli_distribution coin(0.5);
    for (std::uint64_t i = 0; i < bits.size(); ++i) bits.set(i, coin(rng));
    const Bitmap b(p, bits);
    if (!(reverse_bitmap(reverse_bitmap(b)) == b)) bad_reverse = b.to_string();
    if (b.empty_language()) continue;
    const RankedAutomaton dfa = bitmap_to_min_dfa(b);
    const NfaResult nfa = bitmap_to_min_nfa(b);
    if (!(automaton_to_bitmap(dfa) == b) || !(automaton_to_bitmap(nfa.automaton) == b)) bad_roundtrip = b.to_string();
    if (!equivalent(dfa, nfa.automaton)) bad_equiv = b.to_string();
    if (BigInt(dfa.num_states() + 1) > campeanu_ho_bound(k, ell).value ||
        BigInt(nfa.automaton.num_states()) > nfa_max_size(k, ell) || nfa.automaton.num_states() > dfa.num_states()) {
      bad_bound = b.to_string();
    }
  }
  report("bitmap-roundtrip", bad_roundtrip.empty(), bad_roundtrip);
  report("reverse-involution", bad_reverse.empty(), bad_reverse);
  report("dfa-nfa-equivalence", bad_equiv.empty(), bad_equiv);
  report("state-bounds", bad_bound.empty(), bad_bound);
  out << "seed " << o.seed << " samples " << o.samples << '\n';
  return failures == 0 ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Block languages as bitmaps: minimal automata, operations and state-complexity checks", "blocklang"};
  app.require_subcommand(1);

  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget", o.budget, "cover search node budget (default: $BLOCKSET_BUDGET or 10^7)");
  };

  auto* convert = app.add_subcommand("convert", "bitmap to minimal DFA or NFA");
  convert->add_option("input", o.inputs, "BLK1 file")->required();
  convert->add_option("--to", o.to)->check(CLI::IsMember({"min-dfa", "min-nfa"}));
  convert->add_option("--solver", o.solver)->check(CLI::IsMember({"exact", "greedy"}));
  add_budget(convert);
  convert->add_flag("--allow-uncertified", o.allow_uncertified, "accept a cover that was not proved minimal");
  convert->add_flag("--parallel", o.parallel, "solve rank covers concurrently");
  convert->add_option("-o,--output", o.output, "AUT1 output file");

  auto* op = app.add_subcommand("op", "language operation on BLK1 (or AUT1) inputs");
  op->add_option("operation", o.name)
      ->required()
      ->check(CLI::IsMember({"and", "or", "not", "reverse", "concat", "add-word", "remove-word", "star", "plus",
                             "stencil", "complement"}));
  op->add_option("inputs", o.inputs)->required();
  op->add_option("--word", o.word, "word for add-word / remove-word");
  op->add_option("-o,--output", o.output);

  auto* witness = app.add_subcommand("witness", "generate a witness bitmap");
  witness->add_option("family", o.name, "max, palindrome, half-match, prohibited or a simple family")->required();
  witness->add_option("--ell", o.ell);
  witness->add_option("--k", o.k);
  witness->add_option("--d", o.d);
  witness->add_option("--x", o.x);
  witness->add_option("-o,--output", o.output);

  auto* verify = app.add_subcommand("verify", "compare an operation against its state bound");
  verify->add_option("operation", o.name, "operation name or 'table2'")->required();
  verify->add_option("inputs", o.inputs);
  verify->add_option("--word", o.word);
  verify->add_option("--max-ell", o.max_ell);
  verify->add_flag("--serial", o.serial, "evaluate table rows one at a time");
  verify->add_flag("--no-nfa", o.no_nfa, "skip nsc measurements");
  add_budget(verify);

  auto* cover = app.add_subcommand("solve-cover", "solve a COV1 instance");
  cover->add_option("input", o.inputs)->required();
  cover->add_option("--solver", o.solver)->check(CLI::IsMember({"exact", "greedy"}));
  add_budget(cover);
  cover->add_flag("--allow-uncertified", o.allow_uncertified);

  auto* sc = app.add_subcommand("sc", "print dsc, nsc and width profiles of a BLK1 file");
  sc->add_option("input", o.inputs)->required();
  add_budget(sc);
  sc->add_flag("--parallel", o.parallel);

  auto* selftest = app.add_subcommand("selftest", "randomized consistency checks");
  selftest->add_option("--seed", o.seed);
  selftest->add_option("--samples", o.samples);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*convert) return cmd_convert(o, out, err);
    if (*op) return cmd_op(o, out);
    if (*witness) return cmd_witness(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*cover) return cmd_solve_cover(o, out, err);
    if (*sc) return cmd_sc(o, out);
    if (*selftest) return cmd_selftest(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace blocklang::cli
